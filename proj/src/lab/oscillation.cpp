#include "oscillab/lab/oscillation.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/seq/generators.hpp"

#include <random>

namespace oscillab::lab {

std::uint64_t PhaseSampler::effective_denominator() const {
    if (grid_denominator != 0) return grid_denominator;
    if (degree <= 2) return 8;
    std::uint64_t q = 2;
    auto fits = [&](std::uint64_t b) {
        std::uint64_t v = 1;
        for (int i = 0; i < degree; ++i) {
            v *= b;
            if (v > 64) return false;
        }
        return true;
    };
    while (fits(q + 1)) ++q;
    return q;
}

std::vector<expsum::PhasePoly> PhaseSampler::phases() const {
    if (degree < 1) fail(ErrorKind::precondition, "sampler degree must be >= 1");
    std::vector<expsum::PhasePoly> out;
    const std::uint64_t q = effective_denominator();
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(degree), 0);
    while (true) {
        std::vector<BigRat> coeffs{BigRat(0)};
        for (auto a : digits) coeffs.emplace_back(BigInt(a), BigInt(q));
        out.push_back(expsum::PhasePoly::exact(RationalPoly(std::move(coeffs))));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < random_count; ++r) {
        std::vector<double> coeffs{0.0};
        for (int k = 0; k < degree; ++k) coeffs.push_back(static_cast<double>(rng() >> 11) * 0x1p-53);
        out.push_back(expsum::PhasePoly::floating(coeffs));
    }
    for (const auto& p : extra) {
        if (p.degree() > degree) fail(ErrorKind::precondition, "extra phase has degree above the tested order");
        out.push_back(p);
    }
    return out;
}

Json PhaseSampler::descriptor() const {
    Json extras = Json::array();
    for (const auto& p : extra) extras.push_back(p.to_json());
    return {{"degree", degree},
            {"seed", seed},
            {"random", random_count},
            {"grid_denominator", effective_denominator()},
            {"prng", "mt19937_64"},
            {"extra", extras}};
}

const char* verdict_name(Verdict v) noexcept { return v == Verdict::consistent ? "consistent" : "inconsistent"; }

Verdict judge(const std::vector<double>& worst_abs, double tau) {
    if (worst_abs.empty() || !(worst_abs.back() < tau)) return Verdict::inconsistent;
    const std::size_t n = worst_abs.size();
    for (std::size_t i = n >= 3 ? n - 3 : 0; i + 1 < n; ++i)
        if (worst_abs[i + 1] > worst_abs[i] + 2 * tau) return Verdict::inconsistent;
    return Verdict::consistent;
}

Json to_json(const OscillationReport& r) {
    Json j;
    j["order"] = r.order;
    j["grid"] = r.grid;
    j["worst_abs"] = r.worst_abs;
    j["worst_phase_index"] = r.worst_index;
    j["worst_phase"] = r.worst_phase;
    j["tau"] = r.tau;
    j["verdict"] = verdict_name(r.verdict);
    const std::string scale = r.grid.empty() ? "?" : std::to_string(r.grid.back());
    j["statement"] = r.verdict == Verdict::consistent ? "consistent with oscillation at scale N = " + scale
                                                      : "not consistent with oscillation at scale N = " + scale;
    j["sampler"] = r.sampler;
    return j;
}

OscillationReport test_order(const seq::WeightSequence& c, int d, const std::vector<std::size_t>& grid,
                             const PhaseSampler& sampler, double tau, const ExecPolicy& policy) {
    if (d < 1) fail(ErrorKind::precondition, "test_order: d must be >= 1");
    if (!(tau > 0)) fail(ErrorKind::precondition, "test_order: tau must be positive");
    PhaseSampler s = sampler;
    s.degree = d;
    const auto phases = s.phases();

    std::vector<expsum::SumProfile> profiles(phases.size());
    for_each_block(phases.size(), policy.threads,
                   [&](std::size_t i) { profiles[i] = expsum::sum_profile(c, phases[i], grid, ExecPolicy{1}); });

    OscillationReport r;
    r.order = d;
    r.grid = grid;
    r.tau = tau;
    r.sampler = s.descriptor();
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double worst = -1.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < phases.size(); ++i) {
            const double v = std::abs(profiles[i].results[g].value);
            if (v > worst) {
                worst = v;
                arg = i;
            }
        }
        r.worst_abs.push_back(worst);
        r.worst_index.push_back(arg);
        r.worst_phase.push_back(phases[arg].to_json());
    }
    r.verdict = judge(r.worst_abs, tau);
    return r;
}

Json to_json(const SubsequenceReport& r) {
    Json children = Json::object();
    for (const auto& [b, rep] : r.children) children[std::to_string(b)] = to_json(rep);
    return {{"step", r.step}, {"parent", to_json(r.parent)}, {"children", children}};
}

SubsequenceReport test_subsequences(const seq::WeightSequence& c, std::uint64_t a, int d, const std::vector<std::size_t>& grid,
                                    const PhaseSampler& sampler, double tau, const ExecPolicy& policy) {
    if (a < 2) fail(ErrorKind::precondition, "test_subsequences: step must be >= 2");
    std::vector<std::size_t> child_grid;
    for (std::size_t N : grid)
        if (N / a > 0 && (child_grid.empty() || N / a > child_grid.back())) child_grid.push_back(N / a);
    if (child_grid.empty()) fail(ErrorKind::usage, "grid too small for the subsequence step");

    SubsequenceReport out;
    out.step = a;
    out.parent = test_order(c, d, grid, sampler, tau, policy);
    for (std::uint64_t b = 0; b < a; ++b)
        out.children[b] = test_order(seq::arithmetic_subsequence(c, a, b), d, child_grid, sampler, tau, policy);
    return out;
}

}  // namespace oscillab::lab
