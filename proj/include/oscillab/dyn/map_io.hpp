#pragma once

#include "oscillab/core/serialize.hpp"
#include "oscillab/dyn/affine_map.hpp"

namespace oscillab::dyn {

// {"group": {"d": 2, "moduli": [3]},
//  "torus_block": [["1","0"],["1","1"]],
//  "mixing_block": [["0"],["1/3"]],        optional, default zero
//  "finite_block": [["1"]],                optional, default identity
//  "translation": {"torus": ["1/5","0"], "finite": [1]}}
//
// Torus coordinates are "p/q" strings (exact) or JSON numbers, which are
// taken at their exact binary value and mark the map approximate.
using oscillab::to_json;
Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);
Json to_json(const GroupPoint& x);
GroupPoint point_from_json(const GroupSpec& g, const Json& j, bool* approximate = nullptr);
Json to_json(const Endomorphism& e);
Json to_json(const AffineMap& t);
/// Parses and validates.
AffineMap map_from_json(const Json& j);
AffineMap load_map(const std::string& path);

}  // namespace oscillab::dyn
