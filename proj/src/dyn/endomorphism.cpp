#include "oscillab/dyn/endomorphism.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/core/int_matrix.hpp"

namespace oscillab::dyn {

namespace {

BigRat frac(const BigRat& q) { return q - BigRat(floor_of(q)); }

void reduce(Endomorphism& e) {
    for (Eigen::Index i = 0; i < e.mixing.rows(); ++i)
        for (Eigen::Index j = 0; j < e.mixing.cols(); ++j) e.mixing(i, j) = frac(e.mixing(i, j));
    for (Eigen::Index i = 0; i < e.finite.rows(); ++i) {
        const BigInt m(e.group.moduli[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < e.finite.cols(); ++j) e.finite(i, j) = mod_floor(e.finite(i, j), m);
    }
}

std::string entry(const char* block, Eigen::Index i, Eigen::Index j) {
    return std::string(block) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.group == b.group && a.torus == b.torus && a.mixing == b.mixing && a.finite == b.finite;
}

Endomorphism zero_endomorphism(const GroupSpec& g) {
    const Eigen::Index d = g.d, k = g.k();
    return {g, IntMatrix::Zero(d, d), Matrix<BigRat>::Zero(d, k), IntMatrix::Zero(k, k)};
}

Endomorphism identity_endomorphism(const GroupSpec& g) {
    Endomorphism e = zero_endomorphism(g);
    e.torus = IntMatrix::Identity(g.d, g.d);
    e.finite = IntMatrix::Identity(g.k(), g.k());
    reduce(e);
    return e;
}

Endomorphism make_endomorphism(const GroupSpec& g, IntMatrix torus, Matrix<BigRat> mixing, IntMatrix finite) {
    const Eigen::Index d = g.d, k = g.k();
    if (mixing.size() == 0) mixing = Matrix<BigRat>::Zero(d, k);
    if (finite.size() == 0 && k > 0) finite = IntMatrix::Identity(k, k);
    if (torus.rows() != d || torus.cols() != d) fail(ErrorKind::dimension_mismatch, "torus_block must be d x d");
    if (mixing.rows() != d || mixing.cols() != k) fail(ErrorKind::dimension_mismatch, "mixing_block must be d x k");
    if (finite.rows() != k || finite.cols() != k) fail(ErrorKind::dimension_mismatch, "finite_block must be k x k");
    Endomorphism e{g, std::move(torus), std::move(mixing), std::move(finite)};
    reduce(e);
    // column j acts on Z/m_j, so it must vanish on multiples of m_j
    for (Eigen::Index j = 0; j < k; ++j) {
        const BigInt mj(g.moduli[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < d; ++i)
            if (mj % denominator_of(e.mixing(i, j)) != 0)
                fail(ErrorKind::not_automorphism, entry("mixing_block", i, j) + " has a denominator not dividing m_" + std::to_string(j));
        for (Eigen::Index i = 0; i < k; ++i) {
            const BigInt mi(g.moduli[static_cast<std::size_t>(i)]);
            if ((e.finite(i, j) * mj) % mi != 0)
                fail(ErrorKind::not_automorphism, entry("finite_block", i, j) + " does not give a well-defined map Z/m_" + std::to_string(j) +
                                                      " -> Z/m_" + std::to_string(i));
        }
    }
    return e;
}

GroupPoint apply(const Endomorphism& e, const GroupPoint& x) {
    check_point(e.group, x);
    GroupPoint out = zero_point(e.group);
    for (Eigen::Index i = 0; i < e.group.d; ++i) {
        BigRat acc = 0;
        for (Eigen::Index j = 0; j < e.group.d; ++j) acc += BigRat(e.torus(i, j)) * x.torus[static_cast<std::size_t>(j)].value();
        for (Eigen::Index j = 0; j < e.group.k(); ++j) acc += e.mixing(i, j) * BigRat(BigInt(x.finite[static_cast<std::size_t>(j)]));
        out.torus[static_cast<std::size_t>(i)] = UnitRational(acc);
    }
    for (Eigen::Index i = 0; i < e.group.k(); ++i) {
        BigInt acc = 0;
        for (Eigen::Index j = 0; j < e.group.k(); ++j) acc += e.finite(i, j) * BigInt(x.finite[static_cast<std::size_t>(j)]);
        out.finite[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(mod_floor(acc, BigInt(e.group.moduli[static_cast<std::size_t>(i)])));
    }
    return out;
}

Endomorphism compose(const Endomorphism& a, const Endomorphism& b) {
    if (!(a.group == b.group)) fail(ErrorKind::dimension_mismatch, "composing endomorphisms of different groups");
    Endomorphism e{a.group, (a.torus * b.torus).eval(),
                   (a.torus.cast<BigRat>() * b.mixing + a.mixing * b.finite.cast<BigRat>()).eval(), (a.finite * b.finite).eval()};
    reduce(e);
    return e;
}

Endomorphism subtract(const Endomorphism& a, const Endomorphism& b) {
    if (!(a.group == b.group)) fail(ErrorKind::dimension_mismatch, "subtracting endomorphisms of different groups");
    Endomorphism e{a.group, (a.torus - b.torus).eval(), (a.mixing - b.mixing).eval(), (a.finite - b.finite).eval()};
    reduce(e);
    return e;
}

Endomorphism power(const Endomorphism& e, std::uint64_t n) {
    Endomorphism result = identity_endomorphism(e.group);
    Endomorphism base = e;
    while (n > 0) {
        if (n & 1u) result = compose(result, base);
        n >>= 1;
        if (n > 0) base = compose(base, base);
    }
    return result;
}

bool is_zero(const Endomorphism& e) { return is_zero_matrix(e.torus) && is_zero_matrix(e.mixing) && is_zero_matrix(e.finite); }

}  // namespace oscillab::dyn
