#include "doctest.h"

#include "oracles/exact_oracles.hpp"
#include "oscillab/core/error.hpp"
#include "oscillab/seq/generators.hpp"
#include "oscillab/seq/sequence_io.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

using namespace oscillab;
using namespace oscillab::seq;

namespace {

bool bitwise_equal(const WeightSequence& a, const WeightSequence& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t n = 0; n < a.size(); ++n)
        if (std::memcmp(&a.values()(static_cast<Eigen::Index>(n)), &b.values()(static_cast<Eigen::Index>(n)), sizeof(std::complex<double>)) != 0)
            return false;
    return true;
}

}  // namespace

TEST_CASE("mobius examples") {
    const auto mu = mobius(100);
    CHECK(mu[0] == std::complex<double>(0, 0));
    CHECK(mu[1].real() == 1);
    CHECK(mu[12].real() == 0);
    CHECK(mu[30].real() == -1);
    CHECK(mu[97].real() == -1);
    CHECK(mu[35].real() == 1);
}

TEST_CASE("mobius sieve agrees with trial division and the divisor-sum identity") {
    const std::size_t n_max = 10'000;
    const auto mu = mobius_table(n_max);
    for (std::size_t n = 0; n < n_max; ++n) REQUIRE(mu[n] == oracle::mobius_trial(n));
    for (std::size_t n = 1; n < n_max; ++n) {
        int sum = 0;
        for (std::size_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            sum += mu[d];
            if (d * d != n) sum += mu[n / d];
        }
        REQUIRE(sum == (n == 1 ? 1 : 0));
    }
    CHECK(mertens(100) == 1);
    CHECK(mertens(1000) == 2);
}

TEST_CASE("mobius respects the capacity budget") {
    Limits tiny;
    tiny.max_sequence_length = 10;
    CHECK_THROWS_AS(mobius(11, tiny), Error);
    try {
        mobius(11, tiny);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::capacity);
    }
}

TEST_CASE("rademacher determinism and balance") {
    const auto a = rademacher(4, 1);
    const auto b = build(a.provenance());
    CHECK(bitwise_equal(a, b));
    for (std::size_t n = 0; n < 4; ++n) CHECK(std::abs(a[n].real()) == 1.0);

    const auto big = rademacher(1'000'000, 1);
    const double mean = big.values().real().mean();
    CHECK(std::abs(mean) < 0.005);

    const auto c1 = rademacher(64, 1);
    const auto c2 = rademacher(64, 2);
    CHECK_FALSE(bitwise_equal(c1, c2));
}

TEST_CASE("beta_power examples") {
    const auto two = beta_power("2", 50);
    for (std::size_t n = 0; n < two.size(); ++n) CHECK(two[n] == std::complex<double>(1, 0));

    const auto fracs = beta_fractional_parts("1.5", 3);
    CHECK(fracs[2] == 0.25);
    const auto onehalf = beta_power("3/2", 3);
    CHECK(onehalf[2] == std::complex<double>(0, 1));
}

TEST_CASE("golden ratio powers approach integers geometrically") {
    const auto fracs = beta_fractional_parts("golden", 1000);
    const double phi = (1 + std::sqrt(5.0)) / 2;
    // distance of phi^n to the nearest integer is phi^-n
    for (std::size_t n = 2; n <= 30; ++n) {
        const double dist = std::min(fracs[n], 1.0 - fracs[n]);
        CHECK(dist == doctest::Approx(std::pow(phi, -static_cast<double>(n))).epsilon(1e-6));
    }
    for (std::size_t n = 100; n < 1000; ++n) CHECK(std::min(fracs[n], 1.0 - fracs[n]) < 1e-15);
}

TEST_CASE("beta_power precision cap") {
    Limits limits;
    limits.max_precision_bits = 1000;
    CHECK_THROWS_AS(beta_fractional_parts("golden", 2000, limits), Error);
    CHECK_THROWS_AS(beta_fractional_parts("0.5", 10), Error);
}

TEST_CASE("linear_phase and constant controls") {
    const auto alt = linear_phase(0.5, 4);
    const std::complex<double> expected[] = {{1, 0}, {-1, 0}, {1, 0}, {-1, 0}};
    for (std::size_t n = 0; n < 4; ++n) CHECK(alt[n] == expected[n]);
    const auto one = constant({1, 0}, 10);
    CHECK(one.values().sum() == std::complex<double>(10, 0));
    CHECK_THROWS_AS(constant({2, 0}, 3), Error);
}

TEST_CASE("arithmetic subsequences") {
    Eigen::VectorXcd v(6);
    for (int i = 0; i < 6; ++i) v(i) = {static_cast<double>(i) / 10.0, 0};
    const auto c = from_values(v, "test");
    CHECK(bitwise_equal(arithmetic_subsequence(c, 1, 0), c));
    const auto odd = arithmetic_subsequence(c, 2, 1);
    REQUIRE(odd.size() == 3);
    CHECK(odd[0] == c[1]);
    CHECK(odd[1] == c[3]);
    CHECK(odd[2] == c[5]);

    const auto mu4 = arithmetic_subsequence(mobius(100), 4, 0);
    for (std::size_t m = 0; m < mu4.size(); ++m) CHECK(mu4[m] == std::complex<double>(0, 0));

    // composition law: sub(sub(c,a,b),a',b') = sub(c, a a', a b' + b)
    const auto base = rademacher(500, 9);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t a = 1 + rng() % 5, b = rng() % 7, a2 = 1 + rng() % 4, b2 = rng() % 5;
        const auto inner = arithmetic_subsequence(base, a, b);
        if (b2 >= inner.size()) continue;
        CHECK(bitwise_equal(arithmetic_subsequence(inner, a2, b2), arithmetic_subsequence(base, a * a2, a * b2 + b)));
    }
}

TEST_CASE("every generator regenerates bitwise from its JSON provenance") {
    const WeightSequence seqs[] = {mobius(300), rademacher(300, 77), beta_power("golden", 300), linear_phase(std::numbers::sqrt2, 300),
                                   constant({0.6, -0.8}, 300), arithmetic_subsequence(rademacher(300, 3), 3, 2)};
    for (const auto& s : seqs) {
        const Json j = to_json(s.provenance());
        const auto spec = generator_from_json(Json::parse(j.dump()));
        CHECK(spec == s.provenance());
        CHECK(bitwise_equal(build(spec), s));
        CHECK(s.sup_norm_bound() == 1.0);
    }
    CHECK_THROWS_AS(generator_from_json(Json::parse(R"({"kind":"mobius","N":5,"bogus":1})")), Error);
    CHECK(parse_generator("rademacher:N=16,seed=4") == rademacher(16, 4).provenance());
}

TEST_CASE("CSV and OSCS1 preserve values") {
    const auto s = beta_power("golden", 257);
    std::stringstream csv;
    write_csv(s, csv);
    CHECK(bitwise_equal(read_csv(csv, "mem"), s));

    std::stringstream bin;
    write_binary(s, bin);
    const std::string bytes = bin.str();
    CHECK(bytes.substr(0, 5) == "OSCS1");
    CHECK(bytes.size() == 5 + 8 + 257 * 16);
    CHECK(bitwise_equal(read_binary(bin, "mem"), s));
}
