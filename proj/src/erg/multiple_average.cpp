#include "oscillab/erg/multiple_average.hpp"

#include "oscillab/core/binomial.hpp"
#include "oscillab/core/error.hpp"
#include "oscillab/core/turns.hpp"
#include "oscillab/dyn/modular_orbit.hpp"

namespace oscillab::erg {

namespace {

using cplx = std::complex<double>;
using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::vector<std::uint64_t> exponents(const IntPoly& q, std::size_t count) {
    if (q.degree() > default_limits().max_degree) fail(ErrorKind::capacity, "orbit polynomial degree exceeds the cap");
    if (!validate_nat_poly(q)) fail(ErrorKind::invalid_polynomial, "orbit polynomial takes negative values on N", to_json(q).dump());
    std::vector<__int128> coeffs;
    for (const auto& a : q.coefficients()) {
        const auto v = to_int64(a);
        if (!v) fail(ErrorKind::capacity, "orbit polynomial coefficient does not fit in 64 bits");
        coeffs.push_back(*v);
    }
    std::vector<std::uint64_t> out(count);
    const __int128 limit = static_cast<__int128>(std::numeric_limits<std::uint64_t>::max());
    for (std::size_t n = 0; n < count; ++n) {
        __int128 acc = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * static_cast<__int128>(n) + *it;
            if (acc > limit || acc < -limit) fail(ErrorKind::capacity, "orbit exponent q(n) exceeds 64 bits at n = " + std::to_string(n));
        }
        out[n] = static_cast<std::uint64_t>(acc);
    }
    return out;
}

}  // namespace

struct ProductPhase::Impl {
    struct Factor {
        std::vector<std::uint64_t> q;       // q_s(n)
        std::vector<std::uint64_t> weight;  // per state coordinate, mod L
        std::vector<std::uint64_t> table;   // phase numerators of T^j x, when tabulated
        Character chi;
    };
    dyn::AffineMap map;
    dyn::GroupPoint point;
    std::optional<dyn::ModularOrbit> orbit;
    std::uint64_t L = 1;
    std::vector<Factor> factors;

    std::uint64_t phase_of_state(const Factor& f, const std::vector<std::uint64_t>& v) const {
        u128 acc = 0;
        for (std::size_t i = 0; i < v.size(); ++i) acc = (acc + static_cast<u128>(f.weight[i]) * v[i]) % L;
        return static_cast<std::uint64_t>(acc);
    }
};

ProductPhase::ProductPhase(const dyn::AffineMap& t, const dyn::GroupPoint& x, const std::vector<Character>& chars,
                           const std::vector<IntPoly>& qs, std::size_t count)
    : impl_(std::make_unique<Impl>()) {
    const dyn::GroupSpec& g = t.group();
    if (chars.size() != qs.size()) fail(ErrorKind::dimension_mismatch, "need one character per orbit polynomial");
    dyn::check_point(g, x);
    impl_->map = t;
    impl_->point = x;
    impl_->orbit = dyn::ModularOrbit::create(t, x);
    if (impl_->orbit) {
        BigInt L(impl_->orbit->denominator());
        for (auto m : g.moduli) L = lcm(L, BigInt(m));
        if (L >= kMaxModulus)
            impl_->orbit.reset();
        else
            impl_->L = static_cast<std::uint64_t>(L);
    }
    for (std::size_t s = 0; s < chars.size(); ++s) {
        check_character(g, chars[s]);
        if (is_trivial(chars[s])) continue;
        Impl::Factor f;
        f.chi = chars[s];
        f.q = exponents(qs[s], count);
        if (impl_->orbit) {
            const std::uint64_t L = impl_->L;
            const std::uint64_t D = impl_->orbit->denominator();
            for (int i = 0; i < g.d; ++i)
                f.weight.push_back(static_cast<std::uint64_t>(mod_floor(chars[s].torus[static_cast<std::size_t>(i)] * BigInt(L / D), BigInt(L))));
            for (int i = 0; i < g.k(); ++i)
                f.weight.push_back(static_cast<std::uint64_t>(
                    (static_cast<u128>(chars[s].finite[static_cast<std::size_t>(i)]) * (L / g.moduli[static_cast<std::size_t>(i)])) % L));
            std::uint64_t q_max = 0;
            for (auto v : f.q) q_max = std::max(q_max, v);
            if (count > 0 && q_max <= kOrbitTableMax) {
                f.table.resize(q_max + 1);
                std::vector<std::uint64_t> v = impl_->orbit->start();
                for (std::uint64_t j = 0; j <= q_max; ++j) {
                    f.table[j] = impl_->phase_of_state(f, v);
                    if (j < q_max) impl_->orbit->step(v);
                }
            }
        }
        impl_->factors.push_back(std::move(f));
    }
}

ProductPhase::~ProductPhase() = default;
ProductPhase::ProductPhase(ProductPhase&&) noexcept = default;

bool ProductPhase::modular() const noexcept { return impl_->orbit.has_value(); }

double ProductPhase::turns(std::size_t n) const {
    const Impl& im = *impl_;
    if (im.orbit) {
        u128 acc = 0;
        std::vector<std::uint64_t> v;
        for (const auto& f : im.factors) {
            if (!f.table.empty()) {
                acc += f.table[f.q[n]];
            } else {
                im.orbit->state(f.q[n], v);
                acc += im.phase_of_state(f, v);
            }
        }
        return static_cast<double>(static_cast<std::uint64_t>(acc % im.L)) / static_cast<double>(im.L);
    }
    UnitRational total;
    for (const auto& f : im.factors) total += char_phase(im.map.group(), f.chi, dyn::iterate(im.map, im.point, f.q[n]));
    return total.to_double();
}

Json to_json(const AverageResult& r) {
    Json dec = Json::array();
    for (const auto& v : r.decomposition) dec.push_back({v.real(), v.imag()});
    return {{"N", r.N}, {"re", r.value.real()}, {"im", r.value.imag()}, {"abs", std::abs(r.value)}, {"decomposition", dec}, {"modular", r.modular}};
}

namespace {

void check_inputs(const seq::WeightSequence& c, std::size_t N) {
    if (N == 0) fail(ErrorKind::precondition, "N must be >= 1");
    if (N > c.size()) fail(ErrorKind::length, "N = " + std::to_string(N) + " exceeds sequence length " + std::to_string(c.size()));
}

void assert_bound(const seq::WeightSequence& c, std::size_t N, cplx value, const ExecPolicy& policy) {
    const double mean_abs = deterministic_sum<double>(N, policy, [&](std::size_t n) { return std::abs(c[n]); }) / static_cast<double>(N);
    if (std::abs(value) > mean_abs * (1.0 + 1e-12) + 1e-15) fail(ErrorKind::internal, "multiple average exceeds (1/N) sum |c_n|");
}

}  // namespace

AverageResult multiple_average(const seq::WeightSequence& c, const dyn::AffineMap& t, const dyn::GroupPoint& x,
                               const std::vector<Character>& chars, const std::vector<IntPoly>& qs, std::size_t N,
                               const ExecPolicy& policy, std::uint64_t residues) {
    check_inputs(c, N);
    const ProductPhase phase(t, x, chars, qs, N);
    auto term = [&](std::size_t n) { return c[n] * cis_turns(phase.turns(n)); };
    AverageResult out;
    out.N = N;
    out.modular = phase.modular();
    out.value = deterministic_sum<cplx>(N, policy, term) / static_cast<double>(N);
    assert_bound(c, N, out.value, policy);
    if (residues > 0) {
        if (N % residues != 0) fail(ErrorKind::precondition, "residue decomposition needs nu | N");
        const std::size_t M = N / residues;
        for (std::uint64_t r = 0; r < residues; ++r)
            out.decomposition.push_back(deterministic_sum<cplx>(M, policy, [&](std::size_t m) { return term(m * residues + r); }) /
                                        static_cast<double>(M));
    }
    return out;
}

AverageResult multiple_average_trig(const seq::WeightSequence& c, const dyn::AffineMap& t, const dyn::GroupPoint& x,
                                    const TrigPoly& f, const std::vector<IntPoly>& qs, std::size_t N, const ExecPolicy& policy) {
    check_inputs(c, N);
    AverageResult out;
    out.N = N;
    for (const auto& term : f.terms) {
        const auto r = multiple_average(c, t, x, term.characters, qs, N, policy);
        out.value += term.coefficient * r.value;
        out.modular = out.modular && r.modular;
    }
    return out;
}

expsum::SumProfile decay_profile(const seq::WeightSequence& c, const dyn::AffineMap& t, const dyn::GroupPoint& x,
                                 const std::vector<Character>& chars, const std::vector<IntPoly>& qs,
                                 const std::vector<std::size_t>& grid, const ExecPolicy& policy) {
    if (grid.empty()) fail(ErrorKind::usage, "profile grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) fail(ErrorKind::usage, "profile grid must be strictly increasing");
    check_inputs(c, grid.back());
    const std::size_t n_max = grid.back();
    const ProductPhase phase(t, x, chars, qs, n_max);
    std::vector<cplx> terms(n_max);
    for_each_block((n_max + kReductionBlock - 1) / kReductionBlock, policy.threads, [&](std::size_t b) {
        const std::size_t hi = std::min(n_max, (b + 1) * kReductionBlock);
        for (std::size_t n = b * kReductionBlock; n < hi; ++n) terms[n] = c[n] * cis_turns(phase.turns(n));
    });
    expsum::SumProfile out;
    out.grid = grid;
    for (std::size_t N : grid) {
        expsum::SumResult r;
        r.N = N;
        r.value = deterministic_sum<cplx>(N, policy, [&](std::size_t n) { return terms[n]; }) / static_cast<double>(N);
        r.backend = expsum::Backend::exact;
        r.max_phase_error = 0x1p-53;
        assert_bound(c, N, r.value, policy);
        out.results.push_back(r);
    }
    return out;
}

}  // namespace oscillab::erg
