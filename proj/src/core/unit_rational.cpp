#include "oscillab/core/unit_rational.hpp"

#include "oscillab/core/error.hpp"

namespace oscillab {

namespace {

BigRat reduce_mod_one(const BigRat& q) {
    const BigInt den = denominator_of(q);
    return BigRat(mod_floor(numerator_of(q), den), den);
}

}  // namespace

UnitRational::UnitRational(const BigRat& value) : value_(reduce_mod_one(value)) {}

UnitRational::UnitRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) fail(ErrorKind::internal, "UnitRational: zero denominator");
    value_ = reduce_mod_one(BigRat(numerator, denominator));
}

UnitRational::UnitRational(long numerator, long denominator) : UnitRational(BigInt(numerator), BigInt(denominator)) {}

double UnitRational::to_double() const { return static_cast<double>(value_); }

UnitRational& UnitRational::operator+=(const UnitRational& other) {
    value_ += other.value_;
    if (value_ >= 1) value_ -= 1;
    return *this;
}

UnitRational& UnitRational::operator-=(const UnitRational& other) {
    value_ -= other.value_;
    if (value_ < 0) value_ += 1;
    return *this;
}

UnitRational operator*(const BigInt& k, const UnitRational& a) {
    // (k * num mod den) / den keeps the numerator bounded by the denominator.
    const BigInt den = a.denominator();
    return UnitRational(mod_floor(k * a.numerator(), den), den);
}

std::string to_string(const UnitRational& x) { return x.numerator().str() + "/" + x.denominator().str(); }

UnitRational parse_unit_rational(std::string_view text) { return UnitRational(parse_rational(text)); }

}  // namespace oscillab
