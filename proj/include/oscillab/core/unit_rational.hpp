#pragma once

#include "oscillab/core/scalar.hpp"

#include <compare>
#include <string>

namespace oscillab {

/// Exact point of R/Z, stored as the reduced representative in [0, 1).
class UnitRational {
   public:
    UnitRational() = default;
    explicit UnitRational(const BigRat& value);
    UnitRational(const BigInt& numerator, const BigInt& denominator);
    UnitRational(long numerator, long denominator);

    const BigRat& value() const noexcept { return value_; }
    BigInt numerator() const { return numerator_of(value_); }
    BigInt denominator() const { return denominator_of(value_); }
    bool is_zero() const { return value_ == 0; }
    double to_double() const;

    UnitRational& operator+=(const UnitRational& other);
    UnitRational& operator-=(const UnitRational& other);

    friend UnitRational operator+(UnitRational a, const UnitRational& b) { return a += b; }
    friend UnitRational operator-(UnitRational a, const UnitRational& b) { return a -= b; }
    friend UnitRational operator-(const UnitRational& a) { return UnitRational(-a.value_); }
    friend UnitRational operator*(const BigInt& k, const UnitRational& a);
    friend bool operator==(const UnitRational& a, const UnitRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const UnitRational& a, const UnitRational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

   private:
    BigRat value_{0};
};

std::string to_string(const UnitRational& x);
UnitRational parse_unit_rational(std::string_view text);

}  // namespace oscillab
