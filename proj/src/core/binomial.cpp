#include "oscillab/core/binomial.hpp"

#include "oscillab/core/error.hpp"

namespace oscillab {

BigInt binomial(const BigInt& m, unsigned j) {
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned i = 0; i < j; ++i) {
        num *= m - i;
        den *= i + 1;
    }
    return num / den;
}

RationalPoly binom_poly(const IntPoly& q, unsigned j) {
    const RationalPoly qr = q.cast<BigRat>();
    RationalPoly acc = RationalPoly::constant(1);
    BigInt factorial = 1;
    for (unsigned i = 0; i < j; ++i) {
        acc = acc * (qr - RationalPoly::constant(BigRat(i)));
        factorial *= i + 1;
    }
    return acc * BigRat(1, factorial);
}

ShiftScale poly_shift_scale(const IntPoly& q, std::uint64_t nu, std::uint64_t r) {
    if (nu == 0 || r >= nu) fail(ErrorKind::precondition, "poly_shift_scale: need 0 <= r < nu");
    const BigInt nu_big(nu);
    const IntPoly shifted = compose(q, IntPoly{BigInt(r), nu_big});
    const BigInt r_prime = mod_floor(shifted[0], nu_big);
    const IntPoly numerator = shifted - IntPoly::constant(r_prime);
    std::vector<BigInt> coeffs;
    coeffs.reserve(numerator.size());
    for (const auto& c : numerator.coefficients()) {
        if (c % nu_big != 0) fail(ErrorKind::integrality, "poly_shift_scale: non-integer coefficient in q'");
        coeffs.push_back(c / nu_big);
    }
    IntPoly q_prime(std::move(coeffs));
    // a constant q has q' = (q - r')/nu, which may vanish
    if (q.degree() >= 1 && q_prime.degree() != q.degree())
        fail(ErrorKind::integrality, "poly_shift_scale: degree of q' differs from degree of q");
    return {std::move(q_prime), r_prime};
}

BigInt cauchy_root_bound(const IntPoly& q) {
    if (q.degree() < 1) return 0;
    const BigInt lead = abs(q.leading());
    BigRat worst = 0;
    for (int i = 0; i < q.degree(); ++i) {
        const BigRat ratio(abs(q[static_cast<std::size_t>(i)]), lead);
        if (ratio > worst) worst = ratio;
    }
    const BigRat bound = 1 + worst;
    BigInt ceil = floor_of(bound);
    if (BigRat(ceil) != bound) ceil += 1;
    return ceil;
}

bool validate_nat_poly(const IntPoly& q) {
    if (q.degree() <= 0) return q.is_zero() || q[0] >= 0;
    if (q.leading() < 0) return false;
    const BigInt bound = cauchy_root_bound(q);
    // Beyond the Cauchy bound q has no roots and the sign of its leading
    // coefficient. Scanning stops early once q(x + n) has only nonnegative
    // coefficients, which certifies q >= 0 on [n, inf).
    for (BigInt n = 0; n <= bound; ++n) {
        if (q(n) < 0) return false;
        const IntPoly shifted = compose(q, IntPoly{n, BigInt(1)});
        bool all_nonnegative = true;
        for (const auto& c : shifted.coefficients()) all_nonnegative = all_nonnegative && c >= 0;
        if (all_nonnegative) return true;
    }
    return true;
}

}  // namespace oscillab
