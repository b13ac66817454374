#pragma once

#include "oscillab/core/polynomial.hpp"
#include "oscillab/core/serialize.hpp"
#include "oscillab/core/unit_rational.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace oscillab::expsum {

enum class Backend { exact, floating };

const char* backend_name(Backend b) noexcept;
Backend parse_backend(std::string_view name);

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct TwoTerm {
    double hi = 0.0;
    double lo = 0.0;
};

TwoTerm to_two_term(const BigRat& q);

struct FloatPhase {
    double value;        // in [0, 1)
    double error_bound;  // absolute, in turns
};

/// Real polynomial P whose values are read mod 1.
///
/// The exact backend holds rational coefficients and evaluates P(n) mod 1
/// without rounding. The floating backend holds two-term coefficients and
/// evaluates by compensated Horner with a mod-1 reduction after every step;
/// irrational coefficients are only representable there.
class PhasePoly {
   public:
    static PhasePoly exact(RationalPoly p);
    static PhasePoly floating(std::vector<TwoTerm> coefficients);
    static PhasePoly floating(const std::vector<double>& coefficients);
    static PhasePoly floating(const RationalPoly& p);

    Backend backend() const noexcept { return backend_; }
    int degree() const noexcept { return degree_; }
    const RationalPoly& rational() const;
    const std::vector<TwoTerm>& float_coefficients() const noexcept { return float_; }

    /// P(x) + slope * x in the same backend.
    PhasePoly plus_linear(const BigRat& slope) const;

    UnitRational eval_exact(const BigInt& n) const;
    FloatPhase eval_float(std::uint64_t n) const;
    /// Phase in turns as a double, for either backend; exact phases are
    /// rounded once at the end.
    double eval_turns(std::uint64_t n) const;
    /// Bound on |eval_turns(n) - P(n) mod 1| (distance on R/Z) for all n' <= n.
    double error_bound(std::uint64_t n) const;

    Json to_json() const;

   private:
    PhasePoly() = default;
    void prepare_exact();

    Backend backend_ = Backend::exact;
    int degree_ = -1;
    RationalPoly rational_;
    std::vector<TwoTerm> float_;
    std::vector<double> coefficient_error_;
    // exact fast path: P(n) mod 1 = (sum numerators[k] n^k mod modulus) / modulus
    bool modular_ = false;
    std::uint64_t modulus_ = 1;
    std::vector<std::uint64_t> numerators_;
};

using PhaseValue = std::variant<UnitRational, FloatPhase>;

/// P(n) mod 1: a UnitRational for the exact backend, a FloatPhase otherwise.
PhaseValue phase_eval(const PhasePoly& p, std::uint64_t n);

/// Comma-separated ascending coefficients. Tokens are "p/q", integers,
/// decimals (all exact) or "sqrt(k)" (floating backend only).
PhasePoly parse_phase(std::string_view text, Backend backend);

}  // namespace oscillab::expsum
