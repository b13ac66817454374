#pragma once

#include "oscillab/core/polynomial.hpp"
#include "oscillab/core/scalar.hpp"

#include <cstdint>
#include <initializer_list>

namespace oscillab {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);

/// det(xI - A), computed by Faddeev-LeVerrier with exact integer division.
IntPoly char_poly(const IntMatrix& a);

BigInt determinant(const IntMatrix& a);

template <typename Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& a, std::uint64_t exponent) {
    Matrix<Scalar> result = Matrix<Scalar>::Identity(a.rows(), a.cols());
    Matrix<Scalar> base = a;
    while (exponent > 0) {
        if (exponent & 1u) result = (result * base).eval();
        exponent >>= 1;
        if (exponent > 0) base = (base * base).eval();
    }
    return result;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != typename Derived::Scalar(0)) return false;
    return true;
}

}  // namespace oscillab
