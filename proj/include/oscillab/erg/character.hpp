#pragma once

#include "oscillab/core/serialize.hpp"
#include "oscillab/dyn/group.hpp"

#include <complex>
#include <vector>

namespace oscillab::erg {

/// chi(t, f) = e(<a, t> + sum_i c_i f_i / m_i).
struct Character {
    std::vector<BigInt> torus;          // a, length d
    std::vector<std::uint64_t> finite;  // c_i in [0, m_i)

    friend bool operator==(const Character&, const Character&) = default;
};

struct CharValue {
    UnitRational phase;
    std::complex<double> value;
};

void check_character(const dyn::GroupSpec& g, const Character& chi);
bool is_trivial(const Character& chi);

UnitRational char_phase(const dyn::GroupSpec& g, const Character& chi, const dyn::GroupPoint& x);
CharValue char_eval(const dyn::GroupSpec& g, const Character& chi, const dyn::GroupPoint& x);

/// chi on the first factor of X x X.
Character lift_first(const dyn::GroupSpec& g, const Character& chi);

struct TrigTerm {
    std::complex<double> coefficient;
    std::vector<Character> characters;  // one per orbit polynomial
};

/// sum_terms coefficient * prod_s chi_s(x_s).
struct TrigPoly {
    std::vector<TrigTerm> terms;
};

Json to_json(const Character& chi);
Character character_from_json(const dyn::GroupSpec& g, const Json& j);

}  // namespace oscillab::erg
