#include "doctest.h"

#include "oracles/gowers_oracle.hpp"
#include "oscillab/core/error.hpp"
#include "oscillab/lab/gowers.hpp"
#include "oscillab/lab/oscillation.hpp"
#include "oscillab/lab/po_verify.hpp"
#include "oscillab/seq/generators.hpp"

#include <numbers>
#include <random>

using namespace oscillab;
using namespace oscillab::lab;
using cplx = std::complex<double>;

namespace {

BigRat q(long p, long d) { return BigRat(BigInt(p), BigInt(d)); }

seq::WeightSequence random_complex(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v(i) = std::polar(static_cast<double>(rng() >> 11) * 0x1p-53, 2 * std::numbers::pi * static_cast<double>(rng() >> 11) * 0x1p-53);
    return seq::from_values(v, "random_complex");
}

Eigen::VectorXcd random_signs(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = (rng() >> 63) ? 1.0 : -1.0;
    return v;
}

}  // namespace

TEST_CASE("phase sampler") {
    PhaseSampler s;
    s.degree = 2;
    s.seed = 3;
    CHECK(s.phases().size() == 64 + 128);
    s.degree = 3;
    CHECK(s.effective_denominator() == 4);
    CHECK(s.phases().size() == 64 + 128);
    s.degree = 6;
    CHECK(s.effective_denominator() == 2);
    s.degree = 1;
    s.extra.push_back(expsum::PhasePoly::exact(RationalPoly{0, 0, q(1, 2)}));
    CHECK_THROWS_AS(s.phases(), Error);
}

TEST_CASE("test_order verdicts") {
    PhaseSampler s;
    s.seed = 1;
    const auto grid = expsum::geometric_grid(1024, 2, 5);

    const auto one = seq::constant({1, 0}, 1 << 14);
    const auto r1 = test_order(one, 1, grid, s, 0.05);
    CHECK(r1.verdict == Verdict::inconsistent);
    CHECK(r1.worst_abs.back() == doctest::Approx(1.0));

    const double alpha = std::numbers::sqrt2;
    const auto lin = seq::linear_phase(alpha, 1 << 14);
    PhaseSampler matched = s;
    matched.extra.push_back(expsum::PhasePoly::floating(std::vector<double>{0.0, -alpha}));
    const auto r2 = test_order(lin, 1, grid, matched, 0.05);
    CHECK(r2.verdict == Verdict::inconsistent);
    CHECK(r2.worst_abs.back() > 0.999);

    PhaseSampler wide;
    wide.seed = 1;
    wide.random_count = 200;
    const auto rad = seq::rademacher(1 << 16, 1);
    const auto r3 = test_order(rad, 2, expsum::geometric_grid(1024, 2, 7), wide, 0.05);
    CHECK(r3.verdict == Verdict::consistent);

    // deterministic, independent of thread count
    const auto r4 = test_order(rad, 2, expsum::geometric_grid(1024, 2, 7), wide, 0.05, ExecPolicy{4});
    CHECK(to_json(r3).dump() == to_json(r4).dump());
}

TEST_CASE("judge") {
    CHECK(judge({0.5, 0.1, 0.01, 0.009}, 0.05) == Verdict::consistent);
    CHECK(judge({0.5, 0.1, 0.01, 0.06}, 0.05) == Verdict::inconsistent);
    CHECK(judge({0.01, 0.2, 0.01}, 0.05) == Verdict::inconsistent);
    CHECK(judge({}, 0.05) == Verdict::inconsistent);
}

TEST_CASE("test_subsequences") {
    PhaseSampler s;
    s.seed = 2;
    const auto grid = expsum::geometric_grid(4096, 2, 7);
    const auto rad = seq::rademacher(1 << 18, 5);
    const auto rep = test_subsequences(rad, 2, 1, grid, s, 0.05);
    CHECK(rep.parent.verdict == Verdict::consistent);
    REQUIRE(rep.children.size() == 2);
    for (const auto& [b, child] : rep.children) {
        CHECK(child.verdict == Verdict::consistent);
        CHECK(child.grid.back() == grid.back() / 2);
    }

    Eigen::VectorXcd even(1 << 12);
    for (Eigen::Index n = 0; n < even.size(); ++n) even(n) = (n % 2 == 0) ? 1.0 : 0.0;
    const auto rep2 = test_subsequences(seq::from_values(even, "even"), 2, 1, expsum::geometric_grid(256, 2, 5), s, 0.05);
    CHECK(rep2.parent.verdict == Verdict::inconsistent);
    CHECK(rep2.children.at(0).verdict == Verdict::inconsistent);
    CHECK(rep2.children.at(1).worst_abs.back() == 0.0);
}

TEST_CASE("verify_po examples") {
    const auto mu = seq::mobius(10'000);
    const auto P = expsum::PhasePoly::exact(RationalPoly{0, 0, q(1, 7)});
    const auto v = verify_po(mu, 3, P, 10'000);
    CHECK(v.max_residual() < 1e-10);
    CHECK(v.twist.size() == 3);

    const auto alt = seq::linear_phase(0.5, 8);
    const auto zero = expsum::PhasePoly::exact({});
    const auto parts = expsum::residue_sums(alt, zero, 2, 8);
    CHECK(parts[0] == cplx(0.5, 0));
    const cplx recon = (expsum::twisted_sum(alt, zero, 2, 0, 8) + expsum::twisted_sum(alt, zero, 2, 1, 8)) / 2.0;
    CHECK(std::abs(recon - cplx(0.5, 0)) < 1e-15);
    CHECK(verify_po(alt, 2, zero, 8).reconstruction < 1e-15);

    CHECK_THROWS_AS(verify_po(mu, 4, P, 100), Error);
    try {
        verify_po(mu, 9, P, 100);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_prime);
    }
}

TEST_CASE("residue identities hold on random inputs for all primes up to 13") {
    std::mt19937_64 rng(44);
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const auto c = random_complex(5000, rng());
        const auto P = expsum::PhasePoly::exact(
            RationalPoly{q(static_cast<long>(rng() % 50), 51), q(static_cast<long>(rng() % 50), 53), q(static_cast<long>(rng() % 50), 59)});
        const auto v = verify_po(c, p, P, 4000 + rng() % 1000);
        CHECK(v.decomposition < 1e-10);
        CHECK(v.reconstruction < 1e-10);
        for (double t : v.twist) CHECK(t < 1e-10);
        CHECK(v.decomposition >= 0);
    }
}

TEST_CASE("gowers examples") {
    const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(16);
    for (int k = 1; k <= 4; ++k) CHECK(gowers_norm(one, k).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gowers_norm(one, 2, GowersMethod::fourier).value == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::VectorXcd wave(32);
    for (Eigen::Index n = 0; n < 32; ++n) wave(n) = std::polar(1.0, 2 * std::numbers::pi * 5.0 * static_cast<double>(n) / 32.0);
    CHECK(gowers_norm(wave, 2).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gowers_norm(wave, 2, GowersMethod::fourier).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gowers_norm(wave, 1).value < 1e-12);

    CHECK_THROWS_AS(gowers_norm(Eigen::VectorXcd::Ones(1), 2), Error);
    CHECK_THROWS_AS(gowers_norm(one, 5), Error);
    CHECK_THROWS_AS(gowers_norm(one, 3, GowersMethod::fourier), Error);
    try {
        gowers_norm(Eigen::VectorXcd::Ones(128), 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::budget);
    }
}

TEST_CASE("gowers brute force matches the definition") {
    std::mt19937_64 rng(3);
    for (std::size_t n : {5u, 8u, 11u}) {
        const auto f = random_complex(n, rng()).values();
        const std::vector<cplx> fv(f.data(), f.data() + f.size());
        for (int k = 1; k <= 3; ++k) CHECK(gowers_norm(f, k).value == doctest::Approx(oracle::gowers_direct(fv, k)).epsilon(1e-12));
    }
}

TEST_CASE("gowers brute and fourier agree; monotone in k; modulation invariant") {
    for (std::size_t n : {2u, 17u, 64u, 100u, 128u}) {
        const auto f = random_signs(n, n);
        const double b = gowers_norm(f, 2).value;
        const double fo = gowers_norm(f, 2, GowersMethod::fourier).value;
        CHECK(std::abs(b - fo) < 1e-10);
        const double u1 = gowers_norm(f, 1).value, u3 = gowers_norm(f, 3).value;
        CHECK(u1 <= b + 1e-15);
        CHECK(b <= u3 + 1e-15);

        Eigen::VectorXcd g(f.size());
        for (Eigen::Index x = 0; x < f.size(); ++x)
            g(x) = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((3 * x) % f.size()) / static_cast<double>(n)) * f(x);
        CHECK(std::abs(gowers_norm(g, 2).value - b) < 1e-12);
        CHECK(std::abs(gowers_norm(g, 2, GowersMethod::fourier).value - fo) < 1e-12);
    }
    const auto f = random_signs(64, 9);
    CHECK(gowers_norm(f, 3, GowersMethod::brute, ExecPolicy{1}).value == gowers_norm(f, 3, GowersMethod::brute, ExecPolicy{8}).value);
}
