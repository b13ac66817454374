#include "doctest.h"

#include "oscillab/core/binomial.hpp"
#include "oscillab/core/cyclotomic.hpp"
#include "oscillab/core/int_matrix.hpp"
#include "oscillab/core/parallel.hpp"
#include "oscillab/core/serialize.hpp"
#include "oscillab/core/unit_rational.hpp"

#include <random>

using namespace oscillab;

namespace {

IntPoly ip(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

BigRat q(long p, long d) { return BigRat(BigInt(p), BigInt(d)); }

}  // namespace

TEST_CASE("UnitRational stays reduced in [0,1)") {
    const UnitRational a(7, 3);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 3);
    const UnitRational b(-1, 4);
    CHECK(b == UnitRational(3, 4));
    CHECK((a + b) == UnitRational(1, 12));
    CHECK((a - UnitRational(1, 3)).is_zero());
    CHECK((BigInt(5) * UnitRational(1, 3)) == UnitRational(2, 3));
    CHECK((BigInt(-5) * UnitRational(1, 3)) == UnitRational(1, 3));
    CHECK(to_string(UnitRational(0, 5)) == "0/1");
    CHECK(parse_unit_rational("13/10") == UnitRational(3, 10));
}

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("-3/6") == q(-1, 2));
    CHECK(parse_rational("0.125") == q(1, 8));
    CHECK(parse_rational("-2.5e-1") == q(-1, 4));
    CHECK(parse_rational("12") == q(12, 1));
    CHECK(exact_rational(0.375) == q(3, 8));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(to_string(q(4, 2)) == "2");
    CHECK(to_string(q(-1, 3)) == "-1/3");
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly(int_matrix({{1, 1}, {0, 1}})) == ip({1, -2, 1}));
    CHECK(char_poly(int_matrix({{0, -1}, {1, 0}})) == ip({1, 0, 1}));
    CHECK(char_poly(int_matrix({{2, 1}, {1, 1}})) == ip({1, -3, 1}));
    CHECK(determinant(int_matrix({{2, 1}, {1, 1}})) == 1);
    CHECK(determinant(int_matrix({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}})) == 1);
}

TEST_CASE("Cayley-Hamilton on random small matrices") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        IntMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = BigInt(static_cast<long>(rng() % 7) - 3);
        const IntMatrix zero = evaluate_at(char_poly(a), a);
        CHECK(is_zero_matrix(zero));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == ip({-1, 1}));
    CHECK(cyclotomic(4) == ip({1, 0, 1}));
    // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
    CHECK(cyclotomic(6) == ip({1, -1, 1}));
    CHECK(cyclotomic(12) == ip({1, 0, -1, 0, 1}));
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);

    for (std::uint64_t n = 1; n <= 30; ++n) {
        IntPoly product = IntPoly::constant(1);
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) product = product * cyclotomic(d);
        CHECK(product == IntPoly::monomial(n) - IntPoly::constant(1));
        CHECK(cyclotomic(n).degree() == static_cast<int>(euler_phi(n)));
    }
}

TEST_CASE("cyclotomic orders enumeration") {
    const auto two = cyclotomic_orders_up_to(2);
    CHECK(two == std::vector<std::uint64_t>{1, 2, 3, 4, 6});
    for (auto n : cyclotomic_orders_up_to(16)) CHECK(euler_phi(n) <= 16);
    // largest n with phi(n) <= 16 is 60
    CHECK(cyclotomic_orders_up_to(16).back() == 60);
}

TEST_CASE("cyclotomic_factor examples") {
    auto f = cyclotomic_factor(ip({1, -2, 1}));
    CHECK(f.complete);
    CHECK(f.factors == std::vector<CyclotomicFactor>{{1, 2}});
    f = cyclotomic_factor(ip({1, 0, 1}));
    CHECK(f.complete);
    CHECK(f.factors == std::vector<CyclotomicFactor>{{4, 1}});
    // none of x-1, x+1, x^2+x+1, x^2+1, x^2-x+1 divides x^2-3x+1
    f = cyclotomic_factor(ip({1, -3, 1}));
    CHECK_FALSE(f.complete);
    CHECK(f.factors.empty());
    CHECK(f.cofactor == ip({1, -3, 1}));
    // x^3 - x - 1 is irreducible with a real root > 1
    f = cyclotomic_factor(ip({-1, -1, 0, 1}));
    CHECK_FALSE(f.complete);
}

TEST_CASE("cyclotomic_factor reconstructs complete factorizations") {
    std::mt19937_64 rng(7);
    const auto orders = cyclotomic_orders_up_to(4);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly p = IntPoly::constant(1);
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) p = p * cyclotomic(orders[rng() % orders.size()]);
        const auto f = cyclotomic_factor(p);
        REQUIRE(f.complete);
        CHECK(reconstruct(f) == p);
        for (const auto& factor : f.factors) CHECK(euler_phi(factor.order) <= static_cast<std::uint64_t>(p.degree()));
    }
}

TEST_CASE("binom_poly examples and exact evaluation") {
    CHECK(binom_poly(ip({0, 1}), 2) == RationalPoly{0, q(-1, 2), q(1, 2)});
    CHECK(binom_poly(ip({5, 3, 7}), 0) == RationalPoly::constant(1));
    CHECK(binom_poly(ip({0, 2, 3}), 1) == RationalPoly{0, 2, 3});

    const IntPoly qs[] = {ip({0, 1}), ip({0, 0, 1}), ip({1, 2, 3}), ip({0, 1, 0, 1})};
    for (const auto& qp : qs) {
        for (unsigned j = 0; j <= 4; ++j) {
            const RationalPoly bp = binom_poly(qp, j);
            CHECK(bp.degree() == static_cast<int>(j) * qp.degree());
            for (long m = 0; m <= 12; ++m) {
                const BigInt x = qp(BigInt(m));
                if (x < j) continue;
                // C(x, j) by multiplicative formula over rationals
                BigRat expected = 1;
                for (unsigned i = 0; i < j; ++i) expected *= BigRat(x - i, BigInt(i + 1));
                CHECK(bp(BigRat(m)) == expected);
                CHECK(BigRat(binomial(x, j)) == expected);
            }
        }
    }
}

TEST_CASE("poly_shift_scale examples") {
    auto s = poly_shift_scale(ip({0, 0, 1}), 3, 1);
    CHECK(s.q_prime == ip({0, 2, 3}));
    CHECK(s.r_prime == 1);
    s = poly_shift_scale(ip({0, 1}), 2, 1);
    CHECK(s.q_prime == ip({0, 1}));
    CHECK(s.r_prime == 1);
    // (2m+1)^3 = 8m^3 + 12m^2 + 6m + 1
    s = poly_shift_scale(ip({0, 0, 0, 1}), 2, 1);
    CHECK(s.q_prime == ip({0, 3, 6, 4}));
    CHECK(s.r_prime == 1);
    CHECK_THROWS_AS(poly_shift_scale(ip({0, 1}), 2, 2), Error);
}

TEST_CASE("poly_shift_scale round trip identity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BigInt> c;
        const int deg = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 9));
        const IntPoly qp(std::move(c));
        const std::uint64_t nu = 1 + rng() % 6;
        const std::uint64_t r = rng() % nu;
        const auto s = poly_shift_scale(qp, nu, r);
        CHECK(s.r_prime >= 0);
        CHECK(s.r_prime < nu);
        const IntPoly lhs = s.q_prime * BigInt(nu) + IntPoly::constant(s.r_prime);
        CHECK(lhs == compose(qp, IntPoly{BigInt(r), BigInt(nu)}));
    }
}

TEST_CASE("validate_nat_poly") {
    CHECK(validate_nat_poly(ip({0, 0, 1})));
    CHECK_FALSE(validate_nat_poly(ip({-5, 1})));
    CHECK(validate_nat_poly(ip({1, -3, 2})));  // 1, 0, 3, ...
    CHECK(validate_nat_poly(ip({2, -3, 1})));  // negative only strictly between 1 and 2
    CHECK(validate_nat_poly(ip({})));
    CHECK(validate_nat_poly(ip({3})));
    CHECK_FALSE(validate_nat_poly(ip({-1})));
    CHECK_FALSE(validate_nat_poly(ip({0, 5, -1})));
    CHECK(validate_nat_poly(ip({30, -11, 1})));
    CHECK_FALSE(validate_nat_poly(ip({35, -12, 1})));  // q(6) = -1
    CHECK(cauchy_root_bound(ip({1, -3, 2})) == 3);
}

TEST_CASE("serialization of polynomials and matrices") {
    const RationalPoly p{q(1, 2), 0, q(-3, 7)};
    const Json j = to_json(p);
    CHECK(j.dump() == R"(["1/2","0","-3/7"])");
    CHECK(rational_poly_from_json(j) == p);
    const IntMatrix m = int_matrix({{1, -2}, {3, 4}});
    CHECK(to_json(m).dump() == R"([["1","-2"],["3","4"]])");
    CHECK(int_matrix_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(int_poly_from_json(Json::parse(R"(["1/2"])")), Error);
    CHECK_THROWS_AS(reject_unknown_keys(Json::parse(R"({"a":1,"zz":2})"), {"a"}, "test"), Error);
}

TEST_CASE("deterministic_sum is independent of thread count") {
    std::mt19937_64 rng(3);
    std::vector<double> values(100'003);
    for (auto& v : values) v = static_cast<double>(rng() % 1'000'000) * 1e-7 - 0.05;
    const auto term = [&](std::size_t i) { return values[i]; };
    const double one = deterministic_sum<double>(values.size(), ExecPolicy{1}, term);
    const double eight = deterministic_sum<double>(values.size(), ExecPolicy{8}, term);
    CHECK(one == eight);
}
