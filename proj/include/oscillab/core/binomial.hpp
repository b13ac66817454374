#pragma once

#include "oscillab/core/polynomial.hpp"

#include <cstdint>

namespace oscillab {

/// C(m, j) for integer m (zero when 0 <= m < j).
BigInt binomial(const BigInt& m, unsigned j);

/// m -> C(q(m), j) = q(m)(q(m)-1)...(q(m)-j+1)/j! as a rational polynomial in m.
RationalPoly binom_poly(const IntPoly& q, unsigned j);

struct ShiftScale {
    IntPoly q_prime;
    BigInt r_prime;
};

/// Writes q(m*nu + r) = q'(m)*nu + r' with 0 <= r' < nu and q' integral of the
/// same degree as q. Throws ErrorKind::integrality if that fails.
ShiftScale poly_shift_scale(const IntPoly& q, std::uint64_t nu, std::uint64_t r);

/// True iff q(n) >= 0 for every integer n >= 0.
bool validate_nat_poly(const IntPoly& q);

/// Cauchy bound 1 + max|a_i / a_deg|, rounded up.
BigInt cauchy_root_bound(const IntPoly& q);

}  // namespace oscillab
