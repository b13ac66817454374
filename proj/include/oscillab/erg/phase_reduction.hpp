#pragma once

#include "oscillab/dyn/doubling.hpp"
#include "oscillab/erg/character.hpp"

namespace oscillab::erg {

/// For one residue r mod nu: W^{q_s(m nu + r)} (x, b) = W^{q'_s(m) nu + r'_s} (x, b),
/// and with the binomial orbit
///
///   prod_s chi_s(first component) = e(P_r(m)),
///   P_r(m) = sum_s sum_j t_{s,r,j} C(q'_s(m), j),
///
/// where t_{s,r,j} is the phase of chi_s at y_{r'_s, j} = W^{r'_s} N^j (x, b).
struct ReductionFactor {
    BigInt r_prime;
    IntPoly q_prime;
    std::vector<UnitRational> t;  // j = 0..kappa
};

struct PhaseReduction {
    std::uint64_t r = 0;
    std::uint64_t nu = 1;
    int kappa = 0;
    std::vector<ReductionFactor> factors;
    RationalPoly poly;

    UnitRational eval(const BigInt& m) const { return UnitRational(poly(BigRat(m))); }
};

Json to_json(const PhaseReduction& p);

/// Holds W, its certificate and the y table for one base point; builds the
/// reduction for any residue.
class Reducer {
   public:
    Reducer(const dyn::AffineMap& t, const dyn::GroupPoint& x, std::vector<Character> chars, std::vector<IntPoly> qs);
    /// Same, with a certificate for W computed elsewhere.
    Reducer(const dyn::AffineMap& t, const dyn::EntropyCert& w_cert, const dyn::GroupPoint& x, std::vector<Character> chars,
            std::vector<IntPoly> qs);

    const dyn::EntropyCert& cert() const noexcept { return cert_; }
    const dyn::Doubling& doubling() const noexcept { return w_; }
    const dyn::GroupPoint& base() const noexcept { return z_; }

    PhaseReduction reduce(std::uint64_t r) const;
    /// Exact phase of prod_s chi_s(first component of W^{q_s(n)} (x, b)).
    UnitRational direct_phase(std::uint64_t n) const;

   private:
    void init();

    dyn::AffineMap t_;
    dyn::Doubling w_;
    dyn::EntropyCert cert_;
    dyn::GroupPoint z_;
    std::vector<Character> chars_;  // lifted to X x X
    std::vector<IntPoly> qs_;
    std::unique_ptr<dyn::BinomialOrbit> orbit_;
    std::vector<dyn::AffineMap> pow2_;  // W^{2^i}
};

PhaseReduction phase_reduction(const dyn::AffineMap& t, const dyn::EntropyCert& w_cert, const dyn::GroupPoint& x,
                               const std::vector<Character>& chars, const std::vector<IntPoly>& qs, std::uint64_t r);

struct CrosscheckViolation {
    std::uint64_t r;
    BigInt m;
    UnitRational direct;
    UnitRational reduced;
};

struct CrosscheckReport {
    std::uint64_t nu = 1;
    int kappa = 0;
    BigInt m_first;
    std::uint64_t m_count = 0;
    std::uint64_t checks = 0;
    std::vector<PhaseReduction> reductions;
    std::vector<CrosscheckViolation> violations;
};

Json to_json(const CrosscheckReport& r);

/// Compares direct_phase(m nu + r) with P_r(m) for every r < nu and
/// m = m_first .. m_first + m_count - 1. Throws precondition when the range
/// starts below kappa or some q'_s(m) < kappa, config for approximate maps.
CrosscheckReport reduction_crosscheck(const dyn::AffineMap& t, const dyn::GroupPoint& x, const std::vector<Character>& chars,
                                      const std::vector<IntPoly>& qs, const BigInt& m_first, std::uint64_t m_count);

}  // namespace oscillab::erg
