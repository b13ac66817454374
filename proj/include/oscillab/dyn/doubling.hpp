#pragma once

#include "oscillab/dyn/entropy.hpp"

#include <vector>

namespace oscillab::dyn {

/// W(x1, x2) = (A x1 + x2, x2) on X x X, which conjugates T x = A x + b via
/// (T^n x, b) = W^n (x, b).
struct Doubling {
    AffineMap w;  // zero translation
    GroupPoint b;

    GroupPoint embed(const GroupSpec& g, const GroupPoint& x) const { return pair(g, x, b); }
};

Doubling build_w(const AffineMap& t);

struct ConjugationViolation {
    std::size_t point = 0;
    std::uint64_t n = 0;
};

struct ConjugationReport {
    std::uint64_t n_max = 0;
    std::size_t points = 0;
    std::size_t comparisons = 0;
    std::vector<ConjugationViolation> violations;
};

Json to_json(const ConjugationReport& r);

/// Compares iterate(T, x, n) with iterate-by-steps of W from (x, b) for
/// n = 0..n_max at every point.
ConjugationReport conjugation_check(const AffineMap& t, const std::vector<GroupPoint>& points, std::uint64_t n_max);

/// Table y_{r,j} = W^r N^j x (0 <= r < nu, 0 <= j <= kappa) for a certified
/// automorphism W, giving W^{m nu + r} x = sum_j C(m, j) y_{r,j}.
class BinomialOrbit {
   public:
    BinomialOrbit(const Endomorphism& w, const EntropyCert& cert, const GroupPoint& x);

    const EntropyCert& cert() const noexcept { return cert_; }
    const GroupPoint& y(std::uint64_t r, int j) const;
    /// Throws precondition when m < kappa or r >= nu.
    GroupPoint at(const BigInt& m, std::uint64_t r) const;

   private:
    GroupSpec group_;
    EntropyCert cert_;
    std::vector<std::vector<GroupPoint>> table_;  // [r][j]
};

GroupPoint binomial_orbit(const Endomorphism& w, const EntropyCert& cert, const GroupPoint& x, const BigInt& m, std::uint64_t r);

}  // namespace oscillab::dyn
