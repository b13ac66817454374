#include "oscillab/expsum/phase_poly.hpp"

#include "oscillab/core/error.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace oscillab::expsum {

namespace {

using u128 = unsigned __int128;

// unit roundoff of a two-term value, with headroom for the few operations per step
constexpr double kTwoTermEps = 0x1p-100;

TwoTerm two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// (s * n + c) mod 1 in two-term arithmetic, n < 2^53. The result keeps
// hi in [-0.5, 1.5); only the final read-out maps into [0, 1).
TwoTerm horner_step(const TwoTerm& s, double n, const TwoTerm& c) {
    const double p = s.hi * n;
    double e = std::fma(s.hi, n, -p);
    e = std::fma(s.lo, n, e);
    TwoTerm t = two_sum(p, c.hi);
    t.hi -= std::floor(t.hi);  // exact
    double tail = t.lo + e + c.lo;
    tail -= std::nearbyint(tail);
    return two_sum(t.hi, tail);
}

}  // namespace

const char* backend_name(Backend b) noexcept { return b == Backend::exact ? "exact" : "float"; }

Backend parse_backend(std::string_view name) {
    if (name == "exact") return Backend::exact;
    if (name == "float" || name == "floating") return Backend::floating;
    fail(ErrorKind::usage, "unknown backend '" + std::string(name) + "' (expected exact|float)");
}

TwoTerm to_two_term(const BigRat& q) {
    const double hi = static_cast<double>(q);
    const double lo = static_cast<double>(q - exact_rational(hi));
    return {hi, lo};
}

PhasePoly PhasePoly::exact(RationalPoly p) {
    PhasePoly out;
    out.backend_ = Backend::exact;
    out.degree_ = p.degree();
    out.rational_ = std::move(p);
    out.prepare_exact();
    return out;
}

void PhasePoly::prepare_exact() {
    BigInt denom = 1;
    for (const auto& c : rational_.coefficients()) denom = lcm(denom, denominator_of(c));
    modular_ = denom < (BigInt(1) << 63);
    if (!modular_) return;
    modulus_ = static_cast<std::uint64_t>(denom);
    numerators_.clear();
    for (const auto& c : rational_.coefficients()) {
        const BigInt scaled = numerator_of(c) * (denom / denominator_of(c));
        numerators_.push_back(static_cast<std::uint64_t>(mod_floor(scaled, denom)));
    }
}

PhasePoly PhasePoly::floating(std::vector<TwoTerm> coefficients) {
    PhasePoly out;
    out.backend_ = Backend::floating;
    while (!coefficients.empty() && coefficients.back().hi == 0.0 && coefficients.back().lo == 0.0) coefficients.pop_back();
    for (const auto& c : coefficients)
        if (!std::isfinite(c.hi) || !std::isfinite(c.lo)) fail(ErrorKind::config, "phase coefficients must be finite");
    out.degree_ = static_cast<int>(coefficients.size()) - 1;
    // only the fractional part of each coefficient matters for integer n
    for (auto& c : coefficients) {
        const double whole = std::floor(c.hi);
        c = two_sum(c.hi - whole, c.lo);
    }
    out.coefficient_error_.assign(coefficients.size(), 0.0);
    out.float_ = std::move(coefficients);
    return out;
}

PhasePoly PhasePoly::floating(const std::vector<double>& coefficients) {
    std::vector<TwoTerm> c;
    c.reserve(coefficients.size());
    for (double x : coefficients) c.push_back({x, 0.0});
    return floating(std::move(c));
}

PhasePoly PhasePoly::floating(const RationalPoly& p) {
    std::vector<TwoTerm> c;
    std::vector<double> err;
    for (const auto& q : p.coefficients()) {
        // reduce mod 1 first so the two-term value carries only fractional bits
        const BigRat frac = q - BigRat(floor_of(q));
        c.push_back(to_two_term(frac));
        err.push_back(0x1p-104);
    }
    PhasePoly out = floating(std::move(c));
    out.coefficient_error_ = std::move(err);
    out.coefficient_error_.resize(out.float_.size());
    return out;
}

const RationalPoly& PhasePoly::rational() const {
    if (backend_ != Backend::exact) fail(ErrorKind::internal, "rational(): floating phase polynomial");
    return rational_;
}

PhasePoly PhasePoly::plus_linear(const BigRat& slope) const {
    if (backend_ == Backend::exact) return exact(rational_ + RationalPoly{0, slope});
    std::vector<TwoTerm> c = float_;
    if (c.size() < 2) c.resize(2);
    const TwoTerm s = to_two_term(slope - BigRat(floor_of(slope)));
    const TwoTerm sum = two_sum(c[1].hi, s.hi);
    c[1] = two_sum(sum.hi, sum.lo + c[1].lo + s.lo);
    std::vector<double> err = coefficient_error_;
    err.resize(std::max<std::size_t>(err.size(), 2), 0.0);
    err[1] += 0x1p-104;
    PhasePoly out = floating(std::move(c));
    out.coefficient_error_ = std::move(err);
    out.coefficient_error_.resize(out.float_.size());
    return out;
}

UnitRational PhasePoly::eval_exact(const BigInt& n) const {
    if (backend_ != Backend::exact) fail(ErrorKind::internal, "eval_exact on floating phase polynomial");
    if (modular_ && n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) {
        const std::uint64_t m = modulus_;
        const auto nm = static_cast<u128>(static_cast<std::uint64_t>(n) % m);
        u128 acc = 0;
        for (auto it = numerators_.rbegin(); it != numerators_.rend(); ++it) acc = (acc * nm + *it) % m;
        return UnitRational(BigInt(static_cast<std::uint64_t>(acc)), BigInt(m));
    }
    return UnitRational(rational_(BigRat(n)));
}

FloatPhase PhasePoly::eval_float(std::uint64_t n) const {
    if (backend_ != Backend::floating) fail(ErrorKind::internal, "eval_float on exact phase polynomial");
    if (n > (std::uint64_t{1} << 53)) fail(ErrorKind::precondition, "floating phase evaluation needs n <= 2^53");
    const double x = static_cast<double>(n);
    TwoTerm s{};
    for (auto it = float_.rbegin(); it != float_.rend(); ++it) s = horner_step(s, x, *it);
    double value = s.hi + s.lo;
    value -= std::floor(value);
    if (value >= 1.0) value = 0.0;
    return {value, error_bound(n)};
}

double PhasePoly::error_bound(std::uint64_t n) const {
    if (backend_ == Backend::exact) return 0x1p-53;
    const double x = static_cast<double>(n);
    double err = 0.0;
    for (std::size_t k = float_.size(); k-- > 0;) {
        // the leading step starts from zero and rounds nothing
        const double step = k + 1 == float_.size() ? 0.0 : kTwoTermEps * (x + 1.0);
        err = err * x + step + coefficient_error_[k];
    }
    return err + 0x1p-53;
}

double PhasePoly::eval_turns(std::uint64_t n) const {
    if (backend_ == Backend::floating) return eval_float(n).value;
    if (modular_) {
        const std::uint64_t m = modulus_;
        const auto nm = static_cast<u128>(n % m);
        u128 acc = 0;
        for (auto it = numerators_.rbegin(); it != numerators_.rend(); ++it) acc = (acc * nm + *it) % m;
        return static_cast<double>(static_cast<std::uint64_t>(acc)) / static_cast<double>(m);
    }
    return eval_exact(BigInt(n)).to_double();
}

Json PhasePoly::to_json() const {
    Json j;
    j["backend"] = backend_name(backend_);
    if (backend_ == Backend::exact) {
        j["coefficients"] = oscillab::to_json(rational_);
    } else {
        Json c = Json::array();
        for (const auto& t : float_) c.push_back(t.hi + t.lo);
        j["coefficients"] = c;
    }
    return j;
}

PhaseValue phase_eval(const PhasePoly& p, std::uint64_t n) {
    if (p.backend() == Backend::exact) return p.eval_exact(BigInt(n));
    return p.eval_float(n);
}

PhasePoly parse_phase(std::string_view text, Backend backend) {
    static const std::regex sqrt_token(R"(^\s*(-?)sqrt\((\d+)\)\s*$)");
    std::vector<BigRat> exact;
    std::vector<TwoTerm> floating;
    bool irrational = false;
    std::stringstream ss{std::string(text)};
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::smatch m;
        if (std::regex_match(token, m, sqrt_token)) {
            const BigInt k = parse_integer(m[2].str());
            const BigInt root = boost::multiprecision::sqrt(k);
            if (root * root == k) {
                const BigRat v{m[1].str() == "-" ? BigInt(-root) : root};
                exact.push_back(v);
                floating.push_back(to_two_term(v));
                continue;
            }
            irrational = true;
            const double kd = static_cast<double>(k);
            const double hi = std::sqrt(kd);
            const double lo = (kd - hi * hi - std::fma(hi, hi, -hi * hi)) / (2.0 * hi);
            const double sign = m[1].str() == "-" ? -1.0 : 1.0;
            floating.push_back({sign * hi, sign * lo});
            exact.emplace_back(0);
            continue;
        }
        const BigRat v = parse_rational(token);
        exact.push_back(v);
        floating.push_back(to_two_term(v - BigRat(floor_of(v))));
    }
    if (backend == Backend::exact) {
        if (irrational) fail(ErrorKind::config, "irrational phase coefficients need --backend float");
        return PhasePoly::exact(RationalPoly(std::move(exact)));
    }
    if (!irrational) return PhasePoly::floating(RationalPoly(std::move(exact)));
    return PhasePoly::floating(std::move(floating));
}

}  // namespace oscillab::expsum
