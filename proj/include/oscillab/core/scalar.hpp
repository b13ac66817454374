#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace oscillab {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;

inline BigInt numerator_of(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const BigRat& q) { return boost::multiprecision::denominator(q); }

// Least nonnegative residue of a modulo m (m > 0).
BigInt mod_floor(const BigInt& a, const BigInt& m);
BigInt floor_of(const BigRat& q);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Accepts "p", "p/q", and plain decimals ("-0.125", "3e-2"); decimals are
// converted exactly.
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRat& q);
std::string to_string(const BigInt& z);

// Exact value of a finite double as a dyadic rational.
BigRat exact_rational(double x);

std::optional<std::int64_t> to_int64(const BigInt& z);

}  // namespace oscillab
