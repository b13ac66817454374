#pragma once

#include "oscillab/core/limits.hpp"
#include "oscillab/seq/weight_sequence.hpp"

#include <vector>

namespace oscillab::seq {

/// mu(n) for 0 <= n < count by a linear sieve over smallest prime factors;
/// mu(0) is 0 by convention.
std::vector<std::int8_t> mobius_table(std::size_t count, const Limits& limits = default_limits());

/// M(n) = sum_{1 <= k <= n} mu(k).
std::int64_t mertens(std::size_t n);

WeightSequence mobius(std::size_t count, const Limits& limits = default_limits());
WeightSequence rademacher(std::size_t count, std::uint64_t seed, const Limits& limits = default_limits());
WeightSequence beta_power(const std::string& beta, std::size_t count, const Limits& limits = default_limits());
WeightSequence linear_phase(double alpha, std::size_t count, const Limits& limits = default_limits());
WeightSequence constant(std::complex<double> value, std::size_t count, const Limits& limits = default_limits());

/// result[m] = c[a m + b] while a m + b < c.size().
WeightSequence arithmetic_subsequence(const WeightSequence& c, std::uint64_t a, std::uint64_t b);

/// Wraps caller-provided values; the sup-norm bound is their max modulus.
WeightSequence from_values(Eigen::VectorXcd values, std::string source);

/// Rebuilds a sequence from its provenance.
WeightSequence build(const GeneratorSpec& spec, const Limits& limits = default_limits());

/// beta^n mod 1 for n < count, computed in MPFR at
/// count * ceil(log2 beta) + 64 bits and rounded down to double.
std::vector<double> beta_fractional_parts(const std::string& beta, std::size_t count,
                                          const Limits& limits = default_limits());

}  // namespace oscillab::seq
