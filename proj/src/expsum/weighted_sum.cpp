#include "oscillab/expsum/weighted_sum.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/core/turns.hpp"

#include <cmath>
#include <sstream>

namespace oscillab::expsum {

namespace {

using cplx = std::complex<double>;

void check_length(const seq::WeightSequence& c, std::size_t N) {
    if (N == 0) fail(ErrorKind::precondition, "N must be >= 1");
    if (N > c.size())
        fail(ErrorKind::length, "N = " + std::to_string(N) + " exceeds sequence length " + std::to_string(c.size()));
}

// |S| <= (1/N) sum |c_n| up to accumulated rounding.
void assert_triangle(const seq::WeightSequence& c, std::size_t N, cplx value, const ExecPolicy& policy) {
    const double mean_abs =
        deterministic_sum<double>(N, policy, [&](std::size_t n) { return std::abs(c[n]); }) / static_cast<double>(N);
    if (std::abs(value) > mean_abs * (1.0 + 1e-12) + 1e-15)
        fail(ErrorKind::internal, "weighted sum violates the triangle inequality");
}

}  // namespace

std::vector<std::size_t> geometric_grid(std::size_t start, double factor, std::size_t count) {
    if (start == 0 || count == 0 || !(factor > 1.0)) fail(ErrorKind::usage, "grid needs start >= 1, factor > 1, count >= 1");
    std::vector<std::size_t> grid;
    double x = static_cast<double>(start);
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = static_cast<std::size_t>(std::llround(x));
        if (!grid.empty() && n <= grid.back()) fail(ErrorKind::usage, "grid is not strictly increasing; raise the factor");
        grid.push_back(n);
        x *= factor;
    }
    return grid;
}

std::vector<std::size_t> parse_grid(std::string_view text) {
    std::stringstream ss{std::string(text)};
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
        fail(ErrorKind::usage, "grid must be 'start,factor,count'");
    try {
        return geometric_grid(std::stoull(a), std::stod(b), std::stoull(c));
    } catch (const std::logic_error&) {
        fail(ErrorKind::usage, "grid must be 'start,factor,count'");
    }
}

SumResult weighted_sum(const seq::WeightSequence& c, const PhasePoly& p, std::size_t N, const ExecPolicy& policy) {
    check_length(c, N);
    const cplx total = deterministic_sum<cplx>(N, policy, [&](std::size_t n) { return c[n] * cis_turns(p.eval_turns(n)); });
    SumResult out;
    out.N = N;
    out.value = total / static_cast<double>(N);
    out.backend = p.backend();
    out.max_phase_error = p.error_bound(N - 1);
    assert_triangle(c, N, out.value, policy);
    return out;
}

std::vector<cplx> residue_sums(const seq::WeightSequence& c, const PhasePoly& p, std::uint64_t modulus, std::size_t N,
                               const ExecPolicy& policy) {
    check_length(c, N);
    if (modulus < 2) fail(ErrorKind::precondition, "residue_sums: modulus must be >= 2");
    std::vector<cplx> out(modulus, cplx{});
    for (std::uint64_t j = 0; j < modulus && j < N; ++j) {
        const std::size_t count = (N - j + modulus - 1) / modulus;
        const cplx total = deterministic_sum<cplx>(count, policy, [&](std::size_t m) {
            const std::size_t n = m * modulus + j;
            return c[n] * cis_turns(p.eval_turns(n));
        });
        out[j] = total / static_cast<double>(N);
    }
    return out;
}

cplx twisted_sum(const seq::WeightSequence& c, const PhasePoly& p, std::uint64_t modulus, std::uint64_t u, std::size_t N,
                 const ExecPolicy& policy) {
    if (modulus < 2 || u >= modulus) fail(ErrorKind::precondition, "twisted_sum: need 0 <= u < p");
    return weighted_sum(c, p.plus_linear(BigRat(BigInt(u), BigInt(modulus))), N, policy).value;
}

SumProfile sum_profile(const seq::WeightSequence& c, const PhasePoly& p, const std::vector<std::size_t>& grid,
                       const ExecPolicy& policy) {
    if (grid.empty()) fail(ErrorKind::usage, "profile grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) fail(ErrorKind::usage, "profile grid must be strictly increasing");
    check_length(c, grid.back());
    // Terms are computed once; each prefix is then reduced with the same block
    // shape as weighted_sum, so the results match it bitwise.
    const std::size_t n_max = grid.back();
    std::vector<cplx> terms(n_max);
    for_each_block((n_max + kReductionBlock - 1) / kReductionBlock, policy.threads, [&](std::size_t b) {
        const std::size_t hi = std::min(n_max, (b + 1) * kReductionBlock);
        for (std::size_t n = b * kReductionBlock; n < hi; ++n) terms[n] = c[n] * cis_turns(p.eval_turns(n));
    });
    SumProfile out;
    out.grid = grid;
    for (std::size_t N : grid) {
        SumResult r;
        r.N = N;
        r.value = deterministic_sum<cplx>(N, policy, [&](std::size_t n) { return terms[n]; }) / static_cast<double>(N);
        r.backend = p.backend();
        r.max_phase_error = p.error_bound(N - 1);
        assert_triangle(c, N, r.value, policy);
        out.results.push_back(r);
    }
    return out;
}

}  // namespace oscillab::expsum
