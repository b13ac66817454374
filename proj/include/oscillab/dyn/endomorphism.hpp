#pragma once

#include "oscillab/dyn/group.hpp"

namespace oscillab::dyn {

/// Endomorphism of T^d x F in block form
///
///   (t, f) -> (A t + M f,  F f)
///
/// A is an integer d x d matrix, M a d x k matrix of rationals mod 1 whose
/// column j has denominators dividing m_j, and F a k x k integer matrix with
/// row i taken mod m_i. There is no T^d -> F block: T^d is connected and F is
/// discrete, so every continuous homomorphism between them is zero.
struct Endomorphism {
    GroupSpec group;
    IntMatrix torus;          // A
    Matrix<BigRat> mixing;    // M, entries in [0, 1)
    IntMatrix finite;         // F, row i in [0, m_i)

    friend bool operator==(const Endomorphism& a, const Endomorphism& b);
};

Endomorphism identity_endomorphism(const GroupSpec& g);
Endomorphism zero_endomorphism(const GroupSpec& g);

/// Builds an endomorphism from raw blocks; reduces M mod 1 and F row-wise and
/// checks shapes and well-definedness (throws not_automorphism naming the
/// offending entry, or dimension_mismatch).
Endomorphism make_endomorphism(const GroupSpec& g, IntMatrix torus, Matrix<BigRat> mixing, IntMatrix finite);

GroupPoint apply(const Endomorphism& e, const GroupPoint& x);
/// a o b
Endomorphism compose(const Endomorphism& a, const Endomorphism& b);
Endomorphism subtract(const Endomorphism& a, const Endomorphism& b);
Endomorphism power(const Endomorphism& e, std::uint64_t n);
bool is_zero(const Endomorphism& e);

}  // namespace oscillab::dyn
