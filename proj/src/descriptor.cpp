#include "qtbord/descriptor.hpp"

#include <fstream>
#include <stdexcept>

namespace qtb::qt {

nlohmann::ordered_json to_descriptor(const CharacteristicPair& m)
{
    nlohmann::ordered_json j;
    j["name"] = m.name;
    j["n"] = m.dim();
    j["m"] = m.num_facets();
    j["vertices"] = m.poly.vertices;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < m.lambda.rows; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < m.lambda.cols; ++c) {
            if (!m.lambda.at(r, c).fits_slong_p())
                throw std::runtime_error("to_descriptor: matrix entry too large for JSON");
            row.push_back(m.lambda.at(r, c).get_si());
        }
        rows.push_back(std::move(row));
    }
    j["lambda"] = std::move(rows);
    j["signs"] = m.vertex_signs;
    return j;
}

CharacteristicPair from_descriptor(const nlohmann::ordered_json& j)
{
    CharacteristicPair m;
    m.name = j.at("name").get<std::string>();
    m.poly.dim = j.at("n").get<int>();
    m.poly.num_facets = j.at("m").get<int>();
    m.poly.vertices = j.at("vertices").get<std::vector<std::vector<int>>>();
    auto rows = j.at("lambda");
    if (static_cast<int>(rows.size()) != m.poly.dim)
        throw std::runtime_error("from_descriptor: lambda has wrong row count");
    m.lambda = IntMat(m.poly.dim, m.poly.num_facets);
    for (int r = 0; r < m.poly.dim; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != m.poly.num_facets)
            throw std::runtime_error("from_descriptor: lambda has wrong column count");
        for (int c = 0; c < m.poly.num_facets; ++c)
            m.lambda.at(r, c) = static_cast<long>(rows[static_cast<size_t>(r)][static_cast<size_t>(c)].get<long long>());
    }
    m.vertex_signs = j.at("signs").get<std::vector<int>>();
    auto problems = validate(m);
    if (!problems.empty())
        throw std::runtime_error("from_descriptor: invalid pair: " + problems.front());
    return m;
}

void save_descriptor(const CharacteristicPair& m, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("save_descriptor: cannot open " + path);
    out << to_descriptor(m).dump(2) << "\n";
}

CharacteristicPair load_descriptor(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_descriptor: cannot open " + path);
    nlohmann::ordered_json j;
    in >> j;
    return from_descriptor(j);
}

}  // namespace qtb::qt
