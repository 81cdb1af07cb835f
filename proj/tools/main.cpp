// Command-line frontend: build families, compute characteristic numbers,
// check the SU condition, form connected sums, sweep the congruence and
// vanishing statements, emit generator certificates, and evaluate boundary
// operators in the formal generator ring.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtbord/bordism.hpp"
#include "qtbord/descriptor.hpp"
#include "qtbord/localization.hpp"
#include "qtbord/verify.hpp"
#include "qtbord/wallring.hpp"

using namespace qtb;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Input {
    std::optional<fam::FamilyPresentation> family;  // set when built from a spec
    qt::CharacteristicPair pair;
    std::string label;
};

// Positional inputs are either JSON descriptor paths or family specs like
// "tildeN(2,3)"; the --family/--n1/--n2/--n/--degrees flags are sugar for the
// latter.
struct InputFlags {
    std::string positional;
    std::string family_tag;
    int n1 = -1, n2 = -1, n = -1;
    std::vector<long long> degrees;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("input", positional,
                        "descriptor.json or family spec, e.g. 'L(2,1)'");
        cmd->add_option("--family", family_tag, "family tag: cpn|proj|L|tildeL|tildeN|product");
        cmd->add_option("--n1", n1, "first family parameter");
        cmd->add_option("--n2", n2, "second family parameter");
        cmd->add_option("--n", n, "dimension parameter for cpn");
        cmd->add_option("--degrees", degrees, "fiber degrees for proj")->delimiter(',');
    }

    Input resolve() const
    {
        std::string spec;
        if (!family_tag.empty()) {
            if (family_tag.find('(') != std::string::npos) {
                spec = family_tag;
            } else if (family_tag == "cpn") {
                spec = "cpn(" + std::to_string(n >= 0 ? n : n1) + ")";
            } else if (family_tag == "proj") {
                std::string d;
                for (long long x : degrees)
                    d += "," + std::to_string(x);
                spec = "proj(" + std::to_string(n1) + d + ")";
            } else {
                spec = family_tag + "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
            }
        } else if (!positional.empty()) {
            if (positional.find(".json") != std::string::npos ||
                std::filesystem::exists(positional)) {
                Input in;
                in.pair = qt::load_descriptor(positional);
                in.label = in.pair.name;
                return in;
            }
            spec = positional;
        } else {
            throw CLI::ValidationError("input", "no manifold given");
        }
        Input in;
        in.family = fam::parse_family_spec(spec);
        in.pair = in.family->pair;
        in.label = in.family->name;
        return in;
    }
};

std::vector<int> parse_omega(const std::string& text, int n)
{
    std::vector<int> exps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        exps.push_back(std::stoi(item));
    if (static_cast<int>(exps.size()) > n)
        throw std::invalid_argument("omega has more entries than the dimension");
    exps.resize(static_cast<size_t>(n), 0);
    return exps;
}

std::string phi_string(const std::vector<mpz_class>& phi)
{
    std::string s = "(";
    for (size_t i = 0; i < phi.size(); ++i)
        s += (i ? "," : "") + phi[i].get_str();
    return s + ")";
}

long long to_ll(const mpz_class& v)
{
    if (!v.fits_slong_p())
        throw std::runtime_error("value out of long-long range for JSON output");
    return v.get_si();
}

int run_family(const Input& in, const std::string& out_path, bool json)
{
    ordered_json desc = qt::to_descriptor(in.pair);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot open " + out_path);
        out << desc.dump(2) << "\n";
    }
    if (json) {
        ordered_json j;
        j["descriptor"] = desc;
        if (in.family) {
            j["dim"] = in.family->n;
            j["su"] = qt::su_check(in.pair).has_value();
            j["c1"] = fam::first_chern_class(*in.family)
                          .str(in.family->presentation.var_names);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << in.label << ": n=" << in.pair.dim() << " m=" << in.pair.num_facets()
              << " vertices=" << in.pair.poly.vertices.size() << "\n";
    if (in.family) {
        const auto& names = in.family->presentation.var_names;
        std::cout << "  c1 = " << fam::first_chern_class(*in.family).str(names) << "\n";
        std::cout << "  total Chern class = "
                  << fam::total_chern_class(*in.family).str(names) << "\n";
        auto phi = qt::su_check(in.pair);
        std::cout << "  su: " << (phi ? "yes, phi = " + phi_string(*phi) : "no") << "\n";
    }
    if (out_path.empty() && !json)
        std::cout << desc.dump(2) << "\n";
    return kExitOk;
}

int run_chern(const Input& in, const std::string& omega_text, bool json)
{
    qt::ChernMonomial omega{parse_omega(omega_text, in.pair.dim())};
    mpz_class local = loc::chern_number(in.pair, omega);
    std::optional<mpz_class> coh;
    if (in.family)
        coh = fam::chern_number_cohomology(*in.family, omega);
    bool agree = !coh || *coh == local;
    if (json) {
        ordered_json j;
        j["manifold"] = in.label;
        j["omega"] = omega.exponents;
        j["localization"] = to_ll(local);
        if (coh)
            j["cohomology"] = to_ll(*coh);
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << omega.str() << "[" << in.label << "] = " << local.get_str() << "\n";
        if (coh && !agree)
            std::cout << "ENGINE DISAGREEMENT: cohomology gives " << coh->get_str() << "\n";
    }
    return agree ? kExitOk : kExitVerificationFailure;
}

int run_s_number(const Input& in, bool json)
{
    mpz_class local = loc::s_number(in.pair);
    std::optional<mpz_class> coh;
    if (in.family)
        coh = fam::s_number_cohomology(*in.family);
    bool agree = !coh || *coh == local;
    if (json) {
        ordered_json j;
        j["manifold"] = in.label;
        j["n"] = in.pair.dim();
        j["s"] = to_ll(local);
        j["agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "s_" << in.pair.dim() << "[" << in.label << "] = " << local.get_str()
                  << "\n";
        if (coh && !agree)
            std::cout << "ENGINE DISAGREEMENT: cohomology gives " << coh->get_str() << "\n";
    }
    return agree ? kExitOk : kExitVerificationFailure;
}

int run_su_check(const Input& in, bool json)
{
    auto phi = qt::su_check(in.pair);
    if (json) {
        ordered_json j;
        j["manifold"] = in.label;
        j["su"] = phi.has_value();
        if (phi) {
            ordered_json arr = ordered_json::array();
            for (const auto& v : *phi)
                arr.push_back(to_ll(v));
            j["phi"] = arr;
        }
        std::cout << j.dump(2) << "\n";
    } else if (phi) {
        std::cout << in.label << ": su, phi = " << phi_string(*phi) << "\n";
    } else {
        std::cout << in.label << ": none\n";
    }
    return kExitOk;
}

int run_verify(const std::string& what, int max, bool json)
{
    verify::SweepReport rep;
    if (what == "lemma1")
        rep = verify::lemma1_sweep(max > 0 ? max : 10);
    else if (what == "snL")
        rep = verify::snl_sweep(max > 0 ? max : 10);
    else if (what == "snN")
        rep = verify::snn_sweep(max > 0 ? max : 10);
    else if (what == "gcdbinom")
        rep = verify::gcdbinom_sweep(max > 0 ? max : 256);
    else if (what == "gcddif")
        rep = verify::gcddif_sweep(max > 0 ? max : 64);
    else if (what == "nmod2")
        rep = verify::nmod2_sweep(max > 0 ? max : 64);
    else if (what == "nmodp")
        rep = verify::nmodp_sweep(max > 0 ? max : 64);
    else if (what == "lucas")
        rep = verify::lucas_sweep(max > 0 ? max : 600);
    else if (what == "granville")
        rep = verify::granville_sweep(max > 0 ? max : 600);
    else if (what == "lowdimqt")
        rep = verify::lowdimqt_sweep();
    else
        throw CLI::ValidationError("verify", "unknown statement '" + what + "'");

    if (json) {
        ordered_json j;
        j["name"] = rep.name;
        j["cases"] = rep.cases;
        j["failures"] = rep.failures;
        j["seconds"] = rep.seconds;
        j["ok"] = rep.ok();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.name << ": " << rep.cases << " cases, " << rep.failures.size()
                  << " failures (" << rep.seconds << " s)\n";
        for (const auto& f : rep.failures)
            std::cout << "  " << f << "\n";
    }
    return rep.ok() ? kExitOk : kExitVerificationFailure;
}

int run_generators(int dim, bool su, bool realize, bool json)
{
    if (dim <= 0 || dim % 2 != 0)
        throw CLI::ValidationError("generators", "--dim must be a positive even integer");
    int i = dim / 2;
    bord::GeneratorCertificate cert;
    if (su) {
        if (i % 2 == 1)
            cert = bord::find_y_odd((i - 1) / 2);
        else
            cert = bord::find_y_even(i / 2);
    } else {
        cert = bord::find_unitary(i);
    }
    ordered_json j = bord::certificate_json(cert);
    if (realize) {
        qt::CharacteristicPair p = bord::realize_certificate(cert);
        j["realization"] = qt::to_descriptor(p);
    }
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (su ? "SU generator" : "unitary generator") << " in dimension " << dim
                  << ": s = " << cert.s_value.get_str() << "\n";
        for (const auto& t : cert.cls.terms)
            std::cout << "  " << (t.coeff >= 0 ? "+" : "") << t.coeff << " ["
                      << t.member.name << "]\n";
    }
    return kExitOk;
}

int run_wall(const std::string& expr, bool json)
{
    wall::WallElement e = wall::parse(expr);
    wall::WallElement d = wall::boundary(e);
    if (json) {
        ordered_json j;
        j["input"] = expr;
        j["element"] = e.str();
        j["boundary"] = d.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "element:  " << e.str() << "\n";
        std::cout << "boundary: " << d.str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact workbench for quasitoric characteristic numbers and bordism generators"};
    app.require_subcommand(1);

    bool json = false;

    auto* family_cmd = app.add_subcommand("family", "build a family instance, print and "
                                                    "optionally save its JSON descriptor");
    family_cmd->add_flag("--json", json, "machine-readable output");
    InputFlags family_in;
    family_in.attach(family_cmd);
    std::string family_out;
    family_cmd->add_option("--out", family_out, "write the descriptor to this path");

    auto* chern_cmd = app.add_subcommand("chern", "evaluate one Chern characteristic number");
    chern_cmd->add_flag("--json", json, "machine-readable output");
    InputFlags chern_in;
    chern_in.attach(chern_cmd);
    std::string omega_text;
    chern_cmd->add_option("--omega", omega_text, "comma-separated exponents i1,i2,...")
        ->required();

    auto* s_cmd = app.add_subcommand("s-number", "evaluate the power-sum characteristic number");
    s_cmd->add_flag("--json", json, "machine-readable output");
    InputFlags s_in;
    s_in.attach(s_cmd);

    auto* su_cmd = app.add_subcommand("su-check", "solve for an integral functional with "
                                                  "phi(lambda_i) = 1 for all facets");
    su_cmd->add_flag("--json", json, "machine-readable output");
    InputFlags su_in;
    su_in.attach(su_cmd);

    auto* sum_cmd = app.add_subcommand("connected-sum",
                                       "equivariant connected sum of two descriptors");
    sum_cmd->add_flag("--json", json, "machine-readable output");
    std::string sum_a, sum_b, sum_out;
    int vertex_a = 0, vertex_b = 0;
    sum_cmd->add_option("a", sum_a, "first descriptor.json or family spec")->required();
    sum_cmd->add_option("b", sum_b, "second descriptor.json or family spec")->required();
    sum_cmd->add_option("--vertex-a", vertex_a, "gluing vertex in the first summand");
    sum_cmd->add_option("--vertex-b", vertex_b, "gluing vertex in the second summand");
    sum_cmd->add_option("--out", sum_out, "write the resulting descriptor here");

    auto* verify_cmd = app.add_subcommand("verify", "sweep one of the verified statements");
    verify_cmd->add_flag("--json", json, "machine-readable output");
    std::string verify_what;
    int verify_max = 0;
    verify_cmd
        ->add_option("statement", verify_what,
                     "lemma1|snL|snN|gcdbinom|gcddif|nmod2|nmodp|lucas|granville|lowdimqt")
        ->required();
    verify_cmd->add_option("--max", verify_max, "sweep bound (statement-specific default)");

    auto* gen_cmd = app.add_subcommand("generators", "emit a generator certificate");
    gen_cmd->add_flag("--json", json, "machine-readable output");
    int gen_dim = 0;
    bool gen_su = false, gen_realize = false;
    gen_cmd->add_option("--dim", gen_dim, "real dimension 2i")->required();
    gen_cmd->add_flag("--su", gen_su, "special unitary generator family");
    gen_cmd->add_flag("--realize", gen_realize, "fold the certificate into one connected sum");

    auto* wall_cmd = app.add_subcommand("wall", "evaluate an expression in the formal "
                                                "generator ring and its boundary");
    wall_cmd->add_flag("--json", json, "machine-readable output");
    std::string wall_expr;
    wall_cmd->add_option("expr", wall_expr, "e.g. '2*x4 - x1*x3'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (family_cmd->parsed())
            return run_family(family_in.resolve(), family_out, json);
        if (chern_cmd->parsed())
            return run_chern(chern_in.resolve(), omega_text, json);
        if (s_cmd->parsed())
            return run_s_number(s_in.resolve(), json);
        if (su_cmd->parsed())
            return run_su_check(su_in.resolve(), json);
        if (sum_cmd->parsed()) {
            InputFlags fa, fb;
            fa.positional = sum_a;
            fb.positional = sum_b;
            Input a = fa.resolve(), b = fb.resolve();
            qt::CharacteristicPair sum = connected_sum(a.pair, vertex_a, b.pair, vertex_b);
            ordered_json desc = qt::to_descriptor(sum);
            if (!sum_out.empty()) {
                std::ofstream out(sum_out);
                if (!out)
                    throw std::runtime_error("cannot open " + sum_out);
                out << desc.dump(2) << "\n";
                std::cout << sum.name << " -> " << sum_out << "\n";
            } else {
                std::cout << desc.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (verify_cmd->parsed())
            return run_verify(verify_what, verify_max, json);
        if (gen_cmd->parsed())
            return run_generators(gen_dim, gen_su, gen_realize, json);
        if (wall_cmd->parsed())
            return run_wall(wall_expr, json);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
