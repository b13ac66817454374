#include "oscillab/core/int_matrix.hpp"

#include "oscillab/core/error.hpp"

#include <vector>

namespace oscillab {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = n == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
    IntMatrix out(n, m);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != m) fail(ErrorKind::dimension_mismatch, "int_matrix: ragged rows");
        Eigen::Index j = 0;
        for (long v : row) out(i, j++) = BigInt(v);
        ++i;
    }
    return out;
}

IntPoly char_poly(const IntMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::dimension_mismatch, "char_poly: matrix is not square");
    const auto n = a.rows();
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    c[static_cast<std::size_t>(n)] = 1;
    const IntMatrix id = IntMatrix::Identity(n, n);
    IntMatrix m = IntMatrix::Zero(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        m = (a * m).eval() + id * c[static_cast<std::size_t>(n - k + 1)];
        const IntMatrix am = a * m;
        const BigInt trace = am.trace();
        if (trace % k != 0) fail(ErrorKind::internal, "char_poly: inexact Faddeev-LeVerrier division");
        c[static_cast<std::size_t>(n - k)] = -trace / k;
    }
    return IntPoly(std::move(c));
}

BigInt determinant(const IntMatrix& a) {
    const IntPoly p = char_poly(a);
    const BigInt c0 = p[0];
    return (a.rows() % 2 == 0) ? c0 : BigInt(-c0);
}

}  // namespace oscillab
