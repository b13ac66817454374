#pragma once

#include "oscillab/dyn/endomorphism.hpp"

namespace oscillab::dyn {

/// T x = L x + b.
struct AffineMap {
    Endomorphism linear;
    GroupPoint translation;
    // Set when the translation came from a floating-point input and holds its
    // exact binary value rather than the intended real number.
    bool approximate = false;

    const GroupSpec& group() const noexcept { return linear.group; }
};

/// Accepts iff |det A| = 1 and f -> F f is a bijection of F (by enumeration,
/// |F| <= limits.max_finite_order). Throws not_automorphism naming the
/// failing condition.
const AffineMap& validate_map(const AffineMap& t, const Limits& limits = default_limits());

GroupPoint apply(const AffineMap& t, const GroupPoint& x);
/// a o b
AffineMap compose(const AffineMap& a, const AffineMap& b);
/// T^n by squaring.
AffineMap power(const AffineMap& t, std::uint64_t n);
GroupPoint iterate(const AffineMap& t, const GroupPoint& x, std::uint64_t n);

}  // namespace oscillab::dyn
