#include "oscillab/core/error.hpp"
#include "oscillab/core/scalar.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <string>

namespace oscillab {

const char* error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::usage: return "UsageError";
        case ErrorKind::config: return "ConfigError";
        case ErrorKind::positive_entropy: return "PositiveEntropy";
        case ErrorKind::not_automorphism: return "NotAutomorphism";
        case ErrorKind::invalid_polynomial: return "InvalidPolynomial";
        case ErrorKind::integrality: return "IntegralityError";
        case ErrorKind::length: return "LengthError";
        case ErrorKind::capacity: return "CapacityError";
        case ErrorKind::precision: return "PrecisionError";
        case ErrorKind::not_prime: return "NotPrime";
        case ErrorKind::budget: return "BudgetError";
        case ErrorKind::dimension_mismatch: return "DimensionMismatch";
        case ErrorKind::precondition: return "PreconditionError";
        case ErrorKind::cert_search_exceeded: return "CertSearchExceeded";
        case ErrorKind::io: return "IoError";
        case ErrorKind::mismatch: return "Mismatch";
        case ErrorKind::internal: return "InternalError";
    }
    return "Error";
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

BigInt floor_of(const BigRat& q) {
    const BigInt num = numerator_of(q);
    const BigInt den = denominator_of(q);
    BigInt quot = num / den;
    if (num < 0 && quot * den != num) quot -= 1;
    return quot;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt pow10(long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
    auto s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) fail(ErrorKind::config, "not an integer: '" + std::string(text) + "'");
    // leading zeros would make GMP read the string as octal
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    const BigInt z{std::string(s)};
    return negative ? BigInt(-z) : z;
}

BigRat parse_rational(std::string_view text) {
    const auto s = trim(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(s.substr(0, slash));
        const BigInt den = parse_integer(s.substr(slash + 1));
        if (den == 0) fail(ErrorKind::config, "zero denominator in '" + std::string(text) + "'");
        return BigRat(num, den);
    }
    // decimal: [sign] digits [. digits] [e[sign]digits]
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = body.find_first_of("eE"); e != std::string_view::npos) {
        exponent = static_cast<long>(parse_integer(body.substr(e + 1)));
        body = body.substr(0, e);
    }
    std::string digits;
    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        const auto whole = body.substr(0, dot);
        const auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !is_digits(whole)) || (!frac.empty() && !is_digits(frac)) ||
            (whole.empty() && frac.empty()))
            fail(ErrorKind::config, "not a rational: '" + std::string(text) + "'");
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!is_digits(body)) fail(ErrorKind::config, "not a rational: '" + std::string(text) + "'");
        digits = std::string(body);
    }
    if (exponent > 4096 || exponent < -4096) fail(ErrorKind::config, "exponent out of range in '" + std::string(text) + "'");
    BigInt mantissa = parse_integer(digits);
    if (negative) mantissa = -mantissa;
    if (exponent >= 0) return BigRat(mantissa * pow10(exponent));
    return BigRat(mantissa, pow10(-exponent));
}

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const BigRat& q) {
    const BigInt den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

BigRat exact_rational(double x) {
    if (!std::isfinite(x)) fail(ErrorKind::config, "non-finite value");
    int exp = 0;
    const double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    const BigRat r{BigInt(scaled)};
    const int shift = exp - 53;
    BigInt two_pow = 1;
    two_pow <<= std::abs(shift);
    if (shift >= 0) return r * BigRat(two_pow);
    return r / BigRat(two_pow);
}

std::optional<std::int64_t> to_int64(const BigInt& z) {
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) return std::nullopt;
    return static_cast<std::int64_t>(z);
}

}  // namespace oscillab
