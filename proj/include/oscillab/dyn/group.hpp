#pragma once

#include "oscillab/core/limits.hpp"
#include "oscillab/core/scalar.hpp"
#include "oscillab/core/unit_rational.hpp"

#include <cstdint>
#include <vector>

namespace oscillab::dyn {

/// X = T^d x Z/m_1 x ... x Z/m_k.
struct GroupSpec {
    int d = 0;
    std::vector<std::uint64_t> moduli;

    int k() const noexcept { return static_cast<int>(moduli.size()); }
    int rank() const noexcept { return d + k(); }
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws config if d + k < 1, a modulus is < 2, or d + k exceeds the limits.
void validate_group(const GroupSpec& g, const Limits& limits = default_limits());

/// |F|, or throws capacity when it exceeds limits.max_finite_order.
std::uint64_t finite_order(const GroupSpec& g, const Limits& limits = default_limits());
std::uint64_t moduli_lcm(const GroupSpec& g);

/// X x X with torus coordinates (t1, t2) and finite coordinates (f1, f2).
GroupSpec doubled(const GroupSpec& g);

struct GroupPoint {
    std::vector<UnitRational> torus;
    std::vector<std::uint64_t> finite;  // f_i in [0, m_i)

    friend bool operator==(const GroupPoint&, const GroupPoint&) = default;
};

GroupPoint zero_point(const GroupSpec& g);
/// Throws dimension_mismatch on wrong sizes, config on unreduced residues.
void check_point(const GroupSpec& g, const GroupPoint& x);

GroupPoint add(const GroupSpec& g, const GroupPoint& a, const GroupPoint& b);
GroupPoint negate(const GroupSpec& g, const GroupPoint& a);
/// s * x, done as (s * numerator) mod denominator per torus coordinate.
GroupPoint scale(const GroupSpec& g, const BigInt& s, const GroupPoint& x);

/// Concatenation (x1, x2) in doubled(g).
GroupPoint pair(const GroupSpec& g, const GroupPoint& x1, const GroupPoint& x2);
GroupPoint first_component(const GroupSpec& g, const GroupPoint& z);
GroupPoint second_component(const GroupSpec& g, const GroupPoint& z);

/// lcm of the torus denominators.
BigInt torus_denominator(const GroupPoint& x);

using oscillab::to_string;
std::string to_string(const GroupPoint& x);

}  // namespace oscillab::dyn
