#include "oscillab/dyn/affine_map.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/core/int_matrix.hpp"

namespace oscillab::dyn {

const AffineMap& validate_map(const AffineMap& t, const Limits& limits) {
    const GroupSpec& g = t.group();
    validate_group(g, limits);
    // re-run the block checks in case the struct was assembled by hand
    make_endomorphism(g, t.linear.torus, t.linear.mixing, t.linear.finite);
    check_point(g, t.translation);

    if (g.d > 0) {
        const BigInt det = determinant(t.linear.torus);
        if (det != 1 && det != -1)
            fail(ErrorKind::not_automorphism, "torus_block has determinant " + to_string(det) + ", expected +-1", to_string(det));
    }
    if (g.k() > 0) {
        const std::uint64_t order = finite_order(g, limits);
        std::vector<bool> hit(order, false);
        std::vector<std::uint64_t> f(g.moduli.size(), 0);
        for (std::uint64_t idx = 0; idx < order; ++idx) {
            std::uint64_t image = 0;
            for (std::size_t i = g.moduli.size(); i-- > 0;) {
                BigInt acc = 0;
                for (std::size_t j = 0; j < f.size(); ++j)
                    acc += t.linear.finite(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * BigInt(f[j]);
                image = image * g.moduli[i] + static_cast<std::uint64_t>(mod_floor(acc, BigInt(g.moduli[i])));
            }
            if (hit[image]) fail(ErrorKind::not_automorphism, "finite_block is not a bijection of F");
            hit[image] = true;
            for (std::size_t i = 0; i < f.size() && ++f[i] == g.moduli[i]; ++i) f[i] = 0;
        }
    }
    return t;
}

GroupPoint apply(const AffineMap& t, const GroupPoint& x) { return add(t.group(), apply(t.linear, x), t.translation); }

AffineMap compose(const AffineMap& a, const AffineMap& b) {
    return {compose(a.linear, b.linear), add(a.group(), apply(a.linear, b.translation), a.translation), a.approximate || b.approximate};
}

AffineMap power(const AffineMap& t, std::uint64_t n) {
    AffineMap result{identity_endomorphism(t.group()), zero_point(t.group()), t.approximate};
    AffineMap base = t;
    while (n > 0) {
        if (n & 1u) result = compose(result, base);
        n >>= 1;
        if (n > 0) base = compose(base, base);
    }
    return result;
}

GroupPoint iterate(const AffineMap& t, const GroupPoint& x, std::uint64_t n) {
    check_point(t.group(), x);
    return apply(power(t, n), x);
}

}  // namespace oscillab::dyn
