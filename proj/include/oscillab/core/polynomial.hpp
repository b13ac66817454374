#pragma once

#include "oscillab/core/error.hpp"
#include "oscillab/core/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace oscillab {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The highest stored coefficient is nonzero unless the polynomial is zero,
/// in which case no coefficients are stored.
template <typename Scalar>
class Polynomial {
   public:
    using scalar_type = Scalar;

    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

    static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
    static Polynomial monomial(std::size_t degree, const Scalar& c = Scalar(1)) {
        std::vector<Scalar> coeffs(degree + 1, Scalar(0));
        coeffs[degree] = c;
        return Polynomial(std::move(coeffs));
    }
    // x
    static Polynomial identity() { return monomial(1); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

    Scalar operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
    Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Scalar(1); }

    template <typename T>
    T operator()(const T& x) const {
        T acc = T(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    template <typename Other>
    Polynomial<Other> cast() const {
        std::vector<Other> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.emplace_back(c);
        return Polynomial<Other>(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Scalar& k) {
        for (auto& c : coeffs_) c *= k;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
    friend Polynomial operator*(Polynomial a, const Scalar& k) { return a *= k; }
    friend Polynomial operator*(const Scalar& k, Polynomial a) { return a *= k; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<BigInt>;
using RationalPoly = Polynomial<BigRat>;

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned exponent) {
    Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
    for (unsigned i = 0; i < exponent; ++i) result = result * p;
    return result;
}

/// p(q(x)).
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
    Polynomial<Scalar> acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<Scalar>::constant(*it);
    return acc;
}

template <typename Scalar>
struct DivMod {
    Polynomial<Scalar> quotient;
    Polynomial<Scalar> remainder;
};

/// Division by a monic divisor; exact over any ring.
template <typename Scalar>
DivMod<Scalar> divmod_monic(const Polynomial<Scalar>& dividend, const Polynomial<Scalar>& divisor) {
    if (!divisor.is_monic()) fail(ErrorKind::internal, "divmod_monic: divisor is not monic");
    std::vector<Scalar> rem = dividend.coefficients();
    const int db = divisor.degree();
    if (dividend.degree() < db) return {Polynomial<Scalar>{}, dividend};
    std::vector<Scalar> quot(rem.size() - static_cast<std::size_t>(db), Scalar(0));
    const auto& b = divisor.coefficients();
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        const Scalar c = rem[static_cast<std::size_t>(i)];
        if (c == Scalar(0)) continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// Evaluates p at a square matrix by Horner's scheme.
template <typename Scalar, typename MatrixScalar>
Matrix<MatrixScalar> evaluate_at(const Polynomial<Scalar>& p, const Matrix<MatrixScalar>& a) {
    const auto n = a.rows();
    Matrix<MatrixScalar> acc = Matrix<MatrixScalar>::Zero(n, n);
    const Matrix<MatrixScalar> id = Matrix<MatrixScalar>::Identity(n, n);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * a).eval() + id * MatrixScalar(*it);
    return acc;
}

}  // namespace oscillab
