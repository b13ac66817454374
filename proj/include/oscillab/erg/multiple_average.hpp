#pragma once

#include "oscillab/core/parallel.hpp"
#include "oscillab/core/polynomial.hpp"
#include "oscillab/dyn/affine_map.hpp"
#include "oscillab/erg/character.hpp"
#include "oscillab/expsum/weighted_sum.hpp"
#include "oscillab/seq/weight_sequence.hpp"

#include <memory>
#include <optional>

namespace oscillab::erg {

/// (1/N) sum_{n<N} c_n prod_s chi_s(T^{q_s(n)} x).
struct AverageResult {
    std::size_t N = 0;
    std::complex<double> value;
    // With a residue modulus nu: entry r is (1/M) sum_{m<M} of the terms at
    // n = m nu + r, M = N / nu.
    std::vector<std::complex<double>> decomposition;
    bool modular = true;  // false when the exact big-rational fallback was used
};

Json to_json(const AverageResult& r);

/// Orbits of one table-size threshold or below are tabulated once; larger
/// exponents are reached by squaring.
inline constexpr std::uint64_t kOrbitTableMax = 10'000'000;

/// Phase in turns of prod_s chi_s(T^{q_s(n)} x) for n < count.
class ProductPhase {
   public:
    ProductPhase(const dyn::AffineMap& t, const dyn::GroupPoint& x, const std::vector<Character>& chars,
                 const std::vector<IntPoly>& qs, std::size_t count);
    ~ProductPhase();
    ProductPhase(ProductPhase&&) noexcept;

    double turns(std::size_t n) const;
    bool modular() const noexcept;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

AverageResult multiple_average(const seq::WeightSequence& c, const dyn::AffineMap& t, const dyn::GroupPoint& x,
                               const std::vector<Character>& chars, const std::vector<IntPoly>& qs, std::size_t N,
                               const ExecPolicy& policy = {}, std::uint64_t residues = 0);

AverageResult multiple_average_trig(const seq::WeightSequence& c, const dyn::AffineMap& t, const dyn::GroupPoint& x,
                                    const TrigPoly& f, const std::vector<IntPoly>& qs, std::size_t N, const ExecPolicy& policy = {});

/// multiple_average at every N of the grid; matches single calls bitwise.
expsum::SumProfile decay_profile(const seq::WeightSequence& c, const dyn::AffineMap& t, const dyn::GroupPoint& x,
                                 const std::vector<Character>& chars, const std::vector<IntPoly>& qs,
                                 const std::vector<std::size_t>& grid, const ExecPolicy& policy = {});

}  // namespace oscillab::erg
