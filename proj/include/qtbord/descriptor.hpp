#ifndef QTBORD_DESCRIPTOR_HPP
#define QTBORD_DESCRIPTOR_HPP

#include <string>

#include <json.hpp>

#include "qtbord/quasitoric.hpp"

namespace qtb::qt {

// JSON manifold descriptor: name, n, m, vertices (0-based facet indices),
// lambda (n rows of m ints), signs (parallel to vertices).  Round-trips
// bit-exactly.
nlohmann::ordered_json to_descriptor(const CharacteristicPair& m);
CharacteristicPair from_descriptor(const nlohmann::ordered_json& j);

void save_descriptor(const CharacteristicPair& m, const std::string& path);
CharacteristicPair load_descriptor(const std::string& path);

}  // namespace qtb::qt

#endif
