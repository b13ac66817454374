#include "doctest.h"

#include "oracles/entropy_oracle.hpp"
#include "oracles/map_catalog.hpp"
#include "oscillab/core/error.hpp"
#include "oscillab/dyn/doubling.hpp"
#include "oscillab/dyn/map_io.hpp"
#include "oscillab/dyn/modular_orbit.hpp"

#include <random>

using namespace oscillab;
using namespace oscillab::dyn;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal;
}

GroupPoint random_point(const GroupSpec& g, std::mt19937_64& rng) {
    GroupPoint x = zero_point(g);
    for (auto& t : x.torus) {
        const long den = 1 + static_cast<long>(rng() % 30);
        t = UnitRational(static_cast<long>(rng() % 100), den);
    }
    for (std::size_t i = 0; i < x.finite.size(); ++i) x.finite[i] = rng() % g.moduli[i];
    return x;
}

AffineMap skew_shift() { return catalog::load(catalog::zero_entropy()[1]); }

oracle::Mat to_oracle(const IntMatrix& a) {
    oracle::Mat m(static_cast<std::size_t>(a.rows()), std::vector<BigInt>(static_cast<std::size_t>(a.cols())));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    return m;
}

}  // namespace

TEST_CASE("validate_map examples") {
    CHECK(kind_of([] { map_from_json(Json::parse(R"({"group":{"d":1},"torus_block":[["2"]]})")); }) == ErrorKind::not_automorphism);
    CHECK_NOTHROW(map_from_json(Json::parse(R"({"group":{"d":2},"torus_block":[["1","1"],["0","1"]],"translation":{"torus":["0.25","0"]}})")));
    CHECK(kind_of([] { map_from_json(Json::parse(R"({"group":{"d":0,"moduli":[4]},"finite_block":[["2"]]})")); }) ==
          ErrorKind::not_automorphism);
    // mixing column for Z/3 must have denominators dividing 3
    CHECK(kind_of([] {
              map_from_json(Json::parse(R"({"group":{"d":1,"moduli":[3]},"torus_block":[["1"]],"mixing_block":[["1/2"]]})"));
          }) == ErrorKind::not_automorphism);
    // Z/2 -> Z/4 by f -> 2f is well defined; Z/4 -> Z/2 by f -> f is too, Z/2 -> Z/4 by f -> f is not
    const GroupSpec g{0, {4, 2}};
    CHECK_NOTHROW(make_endomorphism(g, IntMatrix(0, 0), {}, int_matrix({{1, 2}, {1, 1}})));
    CHECK(kind_of([&] { make_endomorphism(g, IntMatrix(0, 0), {}, int_matrix({{1, 1}, {0, 1}})); }) == ErrorKind::not_automorphism);
    CHECK(kind_of([] { map_from_json(Json::parse(R"({"group":{"d":1},"torus_block":[["1"]],"bogus":1})")); }) == ErrorKind::config);
    CHECK(kind_of([] { map_from_json(Json::parse(R"({"group":{"d":2},"torus_block":[["1"]]})")); }) == ErrorKind::dimension_mismatch);
}

TEST_CASE("apply and iterate examples") {
    const auto rot = map_from_json(Json::parse(R"({"group":{"d":1},"torus_block":[["1"]],"translation":{"torus":["1/3"]}})"));
    CHECK(iterate(rot, zero_point(rot.group()), 3) == zero_point(rot.group()));

    const auto skew = skew_shift();
    const GroupPoint two = iterate(skew, zero_point(skew.group()), 2);
    CHECK(two.torus[0] == UnitRational(2, 5));
    CHECK(two.torus[1] == UnitRational(1, 5));
    CHECK_THROWS_AS(iterate(skew, GroupPoint{{UnitRational(1, 2)}, {}}, 1), Error);

    const GroupPoint x{{UnitRational(1, 7), UnitRational(2, 7)}, {}};
    const std::uint64_t big = 1'000'000'000;
    CHECK(iterate(skew, x, big) == apply(skew, iterate(skew, x, big - 1)));
    CHECK(iterate(skew, x, big) == iterate(skew, iterate(skew, x, 10'000), big - 10'000));
    // closed form: T^n(x, y) = (x + n a, y + n x + n(n-1)/2 a) with a = 1/5
    const BigInt n(big);
    CHECK(iterate(skew, x, big).torus[1] == UnitRational(BigRat(2, 7) + BigRat(n) * BigRat(1, 7) + BigRat(n * (n - 1) / 2) * BigRat(1, 5)));
}

TEST_CASE("iterate obeys the semigroup law and matches repeated apply") {
    std::mt19937_64 rng(17);
    for (const auto& e : catalog::zero_entropy()) {
        const auto t = catalog::load(e);
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_point(t.group(), rng);
            const std::uint64_t a = rng() % 5000, b = rng() % 5000;
            CHECK(iterate(t, x, a + b) == iterate(t, iterate(t, x, a), b));
        }
        auto x = random_point(t.group(), rng);
        const auto x0 = x;
        for (int n = 0; n < 40; ++n) x = apply(t, x);
        CHECK(iterate(t, x0, 40) == x);
    }
}

TEST_CASE("entropy certificate examples") {
    const GroupSpec g2{2, {}};
    const auto unip = entropy_certificate(make_endomorphism(g2, int_matrix({{1, 1}, {0, 1}}), {}, {}));
    CHECK(unip.nu == 1);
    CHECK(unip.kappa == 1);
    const auto rot = entropy_certificate(make_endomorphism(g2, int_matrix({{0, -1}, {1, 0}}), {}, {}));
    CHECK(rot.nu == 4);
    CHECK(rot.kappa == 0);

    try {
        entropy_certificate(make_endomorphism(g2, int_matrix({{2, 1}, {1, 1}}), {}, {}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::positive_entropy);
        CHECK(e.detail() == R"(["1","-3","1"])");
        CHECK(std::string(e.what()).find("x^2 - 3x + 1") != std::string::npos);
    }

    // -1 on Z/4: A - I = 2 is already nilpotent
    const auto fin = entropy_certificate(make_endomorphism(GroupSpec{0, {4}}, IntMatrix(0, 0), {}, int_matrix({{3}})));
    CHECK(fin.nu == 1);
    CHECK(fin.kappa == 1);
    // 2 on Z/5 has order 4 and no smaller power is unipotent
    const auto fin5 = entropy_certificate(make_endomorphism(GroupSpec{0, {5}}, IntMatrix(0, 0), {}, int_matrix({{2}})));
    CHECK(fin5.nu == 4);
    CHECK(fin5.kappa == 0);
}

TEST_CASE("entropy classification agrees with the oracle on the catalog") {
    for (const auto& e : catalog::zero_entropy()) {
        INFO(e.name);
        const auto t = catalog::load(e);
        if (t.group().d > 0) CHECK(oracle::zero_entropy(to_oracle(t.linear.torus)));
        const auto cert = entropy_certificate(t);
        CHECK(verify_certificate(t.linear, cert));
        CHECK(cert.kappa <= kappa_bound(t.group()));
        for (const auto& f : cert.cyclotomic) CHECK(euler_phi(f.order) <= static_cast<std::uint64_t>(t.group().d));

        const auto w = build_w(t);
        const auto wcert = entropy_certificate(w.w);
        CHECK(verify_certificate(w.w.linear, wcert));
    }
    for (const auto& e : catalog::positive_entropy()) {
        INFO(e.name);
        const auto t = catalog::load(e);
        CHECK_FALSE(oracle::zero_entropy(to_oracle(t.linear.torus)));
        CHECK(kind_of([&] { entropy_certificate(t); }) == ErrorKind::positive_entropy);
    }
}

TEST_CASE("W of rotation and skew shift") {
    const auto rot = catalog::load(catalog::zero_entropy()[0]);
    const auto wr = build_w(rot);
    CHECK(wr.w.linear.torus == int_matrix({{1, 1}, {0, 1}}));
    const GroupPoint x{{UnitRational(1, 3)}, {}};
    CHECK(wr.embed(rot.group(), x) == GroupPoint{{UnitRational(1, 3), UnitRational(1, 5)}, {}});

    const auto skew = skew_shift();
    const auto ws = build_w(skew);
    CHECK(ws.w.linear.torus.rows() == 4);
    const auto cert = entropy_certificate(ws.w);
    CHECK(cert.nu == 1);
    CHECK(cert.kappa == 2);
    CHECK(entropy_certificate(skew).kappa == 1);
}

TEST_CASE("conjugation check") {
    const auto rot = catalog::load(catalog::zero_entropy()[0]);
    CHECK(conjugation_check(rot, {GroupPoint{{UnitRational(0, 1)}, {}}, GroupPoint{{UnitRational(3, 4)}, {}}}, 100).violations.empty());
    const auto rep = conjugation_check(skew_shift(), {GroupPoint{{UnitRational(1, 7), UnitRational(2, 7)}, {}}}, 300);
    CHECK(rep.violations.empty());
    CHECK(rep.comparisons == 301);
    const auto z3 = catalog::load(catalog::zero_entropy()[2]);
    CHECK(conjugation_check(z3, {GroupPoint{{UnitRational(1, 2), UnitRational(0, 1)}, {2}}}, 200).violations.empty());
}

TEST_CASE("binomial orbit equals direct iteration") {
    std::mt19937_64 rng(23);
    for (const auto& e : catalog::zero_entropy()) {
        INFO(e.name);
        const auto t = catalog::load(e);
        const auto w = build_w(t);
        const auto cert = entropy_certificate(w.w);
        const GroupSpec g2 = w.w.group();
        const auto z = w.embed(t.group(), random_point(t.group(), rng));
        const BinomialOrbit orbit(w.w.linear, cert, z);
        for (std::uint64_t r = 0; r < cert.nu; ++r) {
            GroupPoint direct = iterate(w.w, z, static_cast<std::uint64_t>(cert.kappa) * cert.nu + r);
            const AffineMap w_nu = power(w.w, cert.nu);
            for (int m = cert.kappa; m <= cert.kappa + 10; ++m) {
                CHECK(orbit.at(BigInt(m), r) == direct);
                direct = apply(w_nu, direct);
            }
        }
        if (cert.kappa > 0) CHECK(kind_of([&] { orbit.at(BigInt(cert.kappa - 1), 0); }) == ErrorKind::precondition);
        CHECK(kind_of([&] { orbit.at(BigInt(cert.kappa), cert.nu); }) == ErrorKind::precondition);
        (void)g2;
    }
    // kappa = 0: the orbit is periodic
    const auto rot4 = catalog::load(catalog::zero_entropy()[4]);
    const auto wcert = entropy_certificate(rot4);
    CHECK(wcert.kappa == 0);
    const GroupPoint x{{UnitRational(1, 3), UnitRational(1, 8)}, {}};
    for (int m = 0; m < 5; ++m) CHECK(binomial_orbit(rot4.linear, wcert, x, BigInt(m), 1) == apply(rot4.linear, x));
}

TEST_CASE("modular orbit agrees with exact iteration") {
    std::mt19937_64 rng(29);
    for (const auto& e : catalog::zero_entropy()) {
        INFO(e.name);
        const auto t = catalog::load(e);
        const auto x = random_point(t.group(), rng);
        const auto orbit = ModularOrbit::create(t, x);
        REQUIRE(orbit.has_value());
        std::vector<std::uint64_t> v = orbit->start(), s;
        for (std::uint64_t n = 0; n < 30; ++n) {
            orbit->state(n, s);
            CHECK(s == v);
            CHECK(orbit->to_point(v) == iterate(t, x, n));
            orbit->step(v);
        }
        const std::uint64_t n = rng();
        orbit->state(n, s);
        CHECK(orbit->to_point(s) == iterate(t, x, n));
    }
}

TEST_CASE("map JSON round trip and approximate translations") {
    for (const auto& e : catalog::zero_entropy()) {
        const auto t = catalog::load(e);
        const auto back = map_from_json(Json::parse(to_json(t).dump()));
        CHECK(back.linear == t.linear);
        CHECK(back.translation == t.translation);
        CHECK_FALSE(back.approximate);
    }
    const auto approx = map_from_json(Json::parse(R"({"group":{"d":1},"torus_block":[["1"]],"translation":{"torus":[0.1]}})"));
    CHECK(approx.approximate);
    CHECK(approx.translation.torus[0].value() == exact_rational(0.1));
}
