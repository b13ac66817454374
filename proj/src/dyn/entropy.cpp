#include "oscillab/dyn/entropy.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/core/int_matrix.hpp"

namespace oscillab::dyn {

std::string poly_to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt c = p[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (mag != 1 || k == 0) s += to_string(mag);
        if (k >= 1) s += "x";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

int kappa_bound(const GroupSpec& g) { return 2 * g.rank(); }

Json to_json(const EntropyCert& c) {
    Json orders = Json::array();
    for (const auto& f : c.cyclotomic)
        for (int i = 0; i < f.multiplicity; ++i) orders.push_back(f.order);
    return {{"nu", c.nu},
            {"kappa", c.kappa},
            {"char_poly", to_json(c.char_poly)},
            {"char_poly_text", poly_to_string(c.char_poly)},
            {"cyclotomic_orders", orders},
            {"nilpotent", {{"torus_block", to_json(c.nilpotent.torus)}}},
            {"search_cap", c.search_cap}};
}

EntropyCert entropy_certificate(const Endomorphism& a) {
    const GroupSpec& g = a.group;
    EntropyCert cert;
    BigInt nu0 = 1;
    if (g.d > 0) {
        cert.char_poly = char_poly(a.torus);
        const auto fac = cyclotomic_factor(cert.char_poly);
        if (!fac.complete)
            fail(ErrorKind::positive_entropy,
                 "positive entropy: characteristic polynomial " + poly_to_string(cert.char_poly) + " has the non-cyclotomic factor " +
                     poly_to_string(fac.cofactor),
                 to_json(fac.cofactor).dump());
        cert.cyclotomic = fac.factors;
        for (const auto& f : fac.factors) nu0 = lcm(nu0, BigInt(f.order));
    } else {
        cert.char_poly = IntPoly{1};
    }
    const auto nu_base = static_cast<std::uint64_t>(nu0);

    // Multiples of nu0 until A^nu - I is nilpotent within the index bound; the
    // finite part has finite order, so some multiple below the cap succeeds.
    std::uint64_t t_cap = 1;
    if (g.k() > 0) t_cap = finite_order(g) * moduli_lcm(g);
    cert.search_cap = t_cap * nu_base;
    const int bound = kappa_bound(g);
    const Endomorphism step = power(a, nu_base);
    const Endomorphism id = identity_endomorphism(g);
    Endomorphism current = step;
    for (std::uint64_t t = 1; t <= t_cap; ++t) {
        const Endomorphism n = subtract(current, id);
        Endomorphism p = n;
        for (int e = 1; e <= bound + 1; ++e) {
            if (is_zero(p)) {
                cert.nu = nu_base * t;
                cert.kappa = e - 1;
                cert.nilpotent = n;
                return cert;
            }
            p = compose(p, n);
        }
        current = compose(current, step);
    }
    fail(ErrorKind::cert_search_exceeded, "no nu <= " + std::to_string(cert.search_cap) + " makes A^nu - I nilpotent");
}

bool verify_certificate(const Endomorphism& a, const EntropyCert& c) {
    const Endomorphism id = identity_endomorphism(a.group);
    if (!is_zero(subtract(subtract(power(a, c.nu), id), c.nilpotent))) return false;
    if (!is_zero(power(c.nilpotent, static_cast<std::uint64_t>(c.kappa) + 1))) return false;
    if (c.kappa >= 1 && is_zero(power(c.nilpotent, static_cast<std::uint64_t>(c.kappa)))) return false;
    return true;
}

}  // namespace oscillab::dyn
