#pragma once

#include "oscillab/erg/multiple_average.hpp"
#include "oscillab/erg/phase_reduction.hpp"

#include <optional>
#include <string>

namespace oscillab::erg {

// {"map": {...} | "path/to/map.json",
//  "point": {"torus": ["1/7","2/7"], "finite": []},
//  "characters": [{"torus": [1, 0]}, {"torus": [0, 1]}],
//  "polynomials": [["0","1"], ["0","0","1"]],
//  "weights": "mobius:N=1000000" | {generator JSON} | "path/to/seq.csv",
//  "grid": "10000,10,3" | {"start": 10000, "factor": 10, "count": 3},
//  "trig": [{"re": 1, "im": 0, "characters": [...]}, ...],     optional
//  "residues": 0,                                               optional
//  "m_range": {"first": 2, "count": 200}}                       optional
struct Scenario {
    dyn::AffineMap map;
    dyn::GroupPoint point;
    std::vector<Character> characters;
    std::vector<IntPoly> polynomials;
    Json weights;  // as given; resolved by load_weights
    std::vector<std::size_t> grid;
    std::optional<TrigPoly> trig;
    std::uint64_t residues = 0;
    std::optional<BigInt> m_first;
    std::uint64_t m_count = 200;
    std::string base_dir;
};

Scenario scenario_from_json(const Json& j, const std::string& base_dir = ".");
Scenario load_scenario(const std::string& path);
seq::WeightSequence load_weights(const Scenario& s);

}  // namespace oscillab::erg
