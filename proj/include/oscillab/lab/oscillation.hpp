#pragma once

#include "oscillab/core/parallel.hpp"
#include "oscillab/core/serialize.hpp"
#include "oscillab/expsum/weighted_sum.hpp"
#include "oscillab/seq/weight_sequence.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace oscillab::lab {

/// Degree-<=d phases to probe a sequence with: `random_count` polynomials with
/// coefficients uniform in [0,1), every polynomial with coefficients in
/// {0, 1/Q, ..., (Q-1)/Q}, and any explicitly supplied phases. Constant terms
/// are zero since they do not change |S_N|.
struct PhaseSampler {
    int degree = 1;
    std::uint64_t seed = 0;
    std::size_t random_count = 128;
    std::uint64_t grid_denominator = 0;  // 0: 8 for d <= 2, else largest Q with Q^d <= 64
    std::vector<expsum::PhasePoly> extra;

    std::uint64_t effective_denominator() const;
    std::vector<expsum::PhasePoly> phases() const;
    Json descriptor() const;
};

enum class Verdict { consistent, inconsistent };
const char* verdict_name(Verdict v) noexcept;

struct OscillationReport {
    int order = 1;
    std::vector<std::size_t> grid;
    std::vector<double> worst_abs;          // max over sampled phases of |S_N|
    std::vector<std::size_t> worst_index;   // index into sampler.phases()
    std::vector<Json> worst_phase;
    double tau = 0.0;
    Verdict verdict = Verdict::inconsistent;
    Json sampler;
};

Json to_json(const OscillationReport& r);

/// Consistent iff worst |S_N| at the last grid point is < tau and the worst
/// values do not rise by more than 2 tau between the last three grid points.
Verdict judge(const std::vector<double>& worst_abs, double tau);

OscillationReport test_order(const seq::WeightSequence& c, int d, const std::vector<std::size_t>& grid,
                             const PhaseSampler& sampler, double tau, const ExecPolicy& policy = {});

struct SubsequenceReport {
    std::uint64_t step = 2;
    OscillationReport parent;
    std::map<std::uint64_t, OscillationReport> children;  // keyed by offset b
};

Json to_json(const SubsequenceReport& r);

/// test_order on c and on (c_{an+b})_n for b = 0..a-1. Children use the parent
/// grid divided by a, so both cover the same stretch of c.
SubsequenceReport test_subsequences(const seq::WeightSequence& c, std::uint64_t a, int d, const std::vector<std::size_t>& grid,
                                    const PhaseSampler& sampler, double tau, const ExecPolicy& policy = {});

}  // namespace oscillab::lab
