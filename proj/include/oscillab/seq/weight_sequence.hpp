#pragma once

#include "oscillab/core/serialize.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <memory>
#include <string>

namespace oscillab::seq {

enum class GeneratorKind { mobius, rademacher, beta_power, linear_phase, constant, subsequence, external };

const char* kind_name(GeneratorKind kind) noexcept;

// Rademacher signs are the top bit of successive std::mt19937_64 outputs.
inline constexpr const char* kRademacherPrng = "mt19937_64-topbit-v1";

/// Everything needed to regenerate a sequence bit for bit.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::constant;
    std::size_t length = 0;
    std::string beta;                   // beta_power: decimal, "p/q", "golden", "silver", "sqrt(k)", "(a+sqrt(b))/c"
    double alpha = 0.0;                 // linear_phase
    std::complex<double> value{1, 0};   // constant
    std::uint64_t seed = 0;             // rademacher
    std::shared_ptr<const GeneratorSpec> parent;  // subsequence
    std::uint64_t step = 1;             // subsequence a
    std::uint64_t offset = 0;           // subsequence b
    std::string source;                 // external: where the values came from

    friend bool operator==(const GeneratorSpec& a, const GeneratorSpec& b);
};

Json to_json(const GeneratorSpec& spec);
GeneratorSpec generator_from_json(const Json& j);

/// "kind[:key=value,...]", e.g. "rademacher:N=4096,seed=1" or "beta_power:N=100,beta=golden".
GeneratorSpec parse_generator(std::string_view text);

/// A finite weight sequence c_0..c_{N-1} with its provenance.
class WeightSequence {
   public:
    WeightSequence(Eigen::VectorXcd values, GeneratorSpec provenance, double sup_norm_bound);

    std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
    std::complex<double> operator[](std::size_t n) const { return values_(static_cast<Eigen::Index>(n)); }
    const Eigen::VectorXcd& values() const noexcept { return values_; }
    const GeneratorSpec& provenance() const noexcept { return provenance_; }
    double sup_norm_bound() const noexcept { return sup_norm_bound_; }

   private:
    Eigen::VectorXcd values_;
    GeneratorSpec provenance_;
    double sup_norm_bound_;
};

}  // namespace oscillab::seq
