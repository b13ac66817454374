#pragma once

#include "oscillab/core/parallel.hpp"
#include "oscillab/expsum/phase_poly.hpp"
#include "oscillab/seq/weight_sequence.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace oscillab::expsum {

/// (1/N) sum_{n<N} c_n e^{2 pi i P(n)}.
struct SumResult {
    std::size_t N = 0;
    std::complex<double> value;
    Backend backend = Backend::exact;
    double max_phase_error = 0.0;  // turns; exact backend reports the final rounding only
};

struct SumProfile {
    std::vector<std::size_t> grid;
    std::vector<SumResult> results;
};

/// round(start * factor^i) for i < count, deduplicated; throws if the
/// result is not strictly increasing with `count` entries.
std::vector<std::size_t> geometric_grid(std::size_t start, double factor, std::size_t count);
std::vector<std::size_t> parse_grid(std::string_view text);  // "start,factor,count"

SumResult weighted_sum(const seq::WeightSequence& c, const PhasePoly& p, std::size_t N, const ExecPolicy& policy = {});

/// S_{N,j} = (1/N) sum_{n<N, n = j mod p} c_n e(P(n)), j = 0..p-1.
std::vector<std::complex<double>> residue_sums(const seq::WeightSequence& c, const PhasePoly& p, std::uint64_t modulus,
                                               std::size_t N, const ExecPolicy& policy = {});

/// S_N^u = weighted_sum(c, P + (u/p) x, N).
std::complex<double> twisted_sum(const seq::WeightSequence& c, const PhasePoly& p, std::uint64_t modulus, std::uint64_t u,
                                 std::size_t N, const ExecPolicy& policy = {});

SumProfile sum_profile(const seq::WeightSequence& c, const PhasePoly& p, const std::vector<std::size_t>& grid,
                       const ExecPolicy& policy = {});

}  // namespace oscillab::expsum
