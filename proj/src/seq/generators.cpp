#include "oscillab/seq/generators.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/core/turns.hpp"

#include <mpfr.h>

#include <cmath>
#include <random>
#include <regex>

namespace oscillab::seq {

namespace {

void check_capacity(std::size_t count, const Limits& limits) {
    if (count == 0) fail(ErrorKind::precondition, "sequence length must be >= 1");
    if (count > limits.max_sequence_length)
        fail(ErrorKind::capacity, "sequence length " + std::to_string(count) + " exceeds the configured budget of " +
                                      std::to_string(limits.max_sequence_length));
}

GeneratorSpec spec_of(GeneratorKind kind, std::size_t count) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.length = count;
    return spec;
}

class MpfrValue {
   public:
    explicit MpfrValue(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
    ~MpfrValue() { mpfr_clear(value_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

   private:
    mpfr_t value_;
};

struct QuadraticSurd {
    long a = 0;  // (a + sqrt(b)) / c
    long b = 0;
    long c = 1;
};

std::optional<QuadraticSurd> parse_surd(const std::string& text) {
    if (text == "golden") return QuadraticSurd{1, 5, 2};
    if (text == "silver") return QuadraticSurd{1, 2, 1};
    std::smatch m;
    static const std::regex bare(R"(^\s*sqrt\((\d+)\)\s*$)");
    static const std::regex full(R"(^\s*\(\s*(-?\d+)\s*\+\s*sqrt\((\d+)\)\s*\)\s*/\s*(\d+)\s*$)");
    if (std::regex_match(text, m, bare)) return QuadraticSurd{0, std::stol(m[1]), 1};
    if (std::regex_match(text, m, full)) {
        QuadraticSurd s{std::stol(m[1]), std::stol(m[2]), std::stol(m[3])};
        if (s.c == 0) fail(ErrorKind::config, "beta: zero denominator");
        return s;
    }
    return std::nullopt;
}

double approximate_beta(const std::string& text) {
    if (auto s = parse_surd(text)) return (static_cast<double>(s->a) + std::sqrt(static_cast<double>(s->b))) / static_cast<double>(s->c);
    return static_cast<double>(parse_rational(text));
}

void set_beta(mpfr_ptr out, const std::string& text) {
    if (auto s = parse_surd(text)) {
        mpfr_set_si(out, s->b, MPFR_RNDN);
        mpfr_sqrt(out, out, MPFR_RNDN);
        mpfr_add_si(out, out, s->a, MPFR_RNDN);
        mpfr_div_si(out, out, s->c, MPFR_RNDN);
        return;
    }
    BigRat q = parse_rational(text);
    mpfr_set_q(out, q.backend().data(), MPFR_RNDN);
}

}  // namespace

std::vector<std::int8_t> mobius_table(std::size_t count, const Limits& limits) {
    check_capacity(count, limits);
    std::vector<std::int8_t> mu(count, 0);
    if (count > 1) mu[1] = 1;
    std::vector<bool> composite(count, false);
    std::vector<std::uint32_t> primes;
    for (std::size_t i = 2; i < count; ++i) {
        if (!composite[i]) {
            primes.push_back(static_cast<std::uint32_t>(i));
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::size_t ip = i * p;
            if (ip >= count) break;
            composite[ip] = true;
            if (i % p == 0) {
                mu[ip] = 0;  // p^2 | ip
                break;
            }
            mu[ip] = static_cast<std::int8_t>(-mu[i]);
        }
    }
    return mu;
}

std::int64_t mertens(std::size_t n) {
    const auto mu = mobius_table(n + 1);
    std::int64_t total = 0;
    for (std::size_t k = 1; k <= n; ++k) total += mu[k];
    return total;
}

WeightSequence mobius(std::size_t count, const Limits& limits) {
    const auto mu = mobius_table(count, limits);
    Eigen::VectorXcd values(static_cast<Eigen::Index>(count));
    for (std::size_t n = 0; n < count; ++n) values(static_cast<Eigen::Index>(n)) = {static_cast<double>(mu[n]), 0.0};
    return WeightSequence(std::move(values), spec_of(GeneratorKind::mobius, count), 1.0);
}

WeightSequence rademacher(std::size_t count, std::uint64_t seed, const Limits& limits) {
    check_capacity(count, limits);
    std::mt19937_64 engine(seed);
    Eigen::VectorXcd values(static_cast<Eigen::Index>(count));
    for (std::size_t n = 0; n < count; ++n) values(static_cast<Eigen::Index>(n)) = {(engine() >> 63) ? 1.0 : -1.0, 0.0};
    auto spec = spec_of(GeneratorKind::rademacher, count);
    spec.seed = seed;
    return WeightSequence(std::move(values), std::move(spec), 1.0);
}

std::vector<double> beta_fractional_parts(const std::string& beta, std::size_t count, const Limits& limits) {
    check_capacity(count, limits);
    const double approx = approximate_beta(beta);
    if (!(approx > 1.0)) fail(ErrorKind::precondition, "beta_power: beta must exceed 1, got '" + beta + "'");
    const double bits_per_step = std::ceil(std::log2(approx));
    const double precision = static_cast<double>(count) * std::max(1.0, bits_per_step) + 64.0;
    if (precision > static_cast<double>(limits.max_precision_bits))
        fail(ErrorKind::precision, "beta_power: needs " + std::to_string(static_cast<long>(precision)) +
                                       " bits, cap is " + std::to_string(limits.max_precision_bits));
    const auto prec = static_cast<mpfr_prec_t>(precision);
    MpfrValue b(prec), power(prec), frac(prec);
    set_beta(b.get(), beta);
    mpfr_set_ui(power.get(), 1, MPFR_RNDN);
    std::vector<double> out(count);
    for (std::size_t n = 0; n < count; ++n) {
        mpfr_frac(frac.get(), power.get(), MPFR_RNDN);
        out[n] = mpfr_get_d(frac.get(), MPFR_RNDD);
        mpfr_mul(power.get(), power.get(), b.get(), MPFR_RNDN);
    }
    return out;
}

WeightSequence beta_power(const std::string& beta, std::size_t count, const Limits& limits) {
    const auto fracs = beta_fractional_parts(beta, count, limits);
    Eigen::VectorXcd values(static_cast<Eigen::Index>(count));
    for (std::size_t n = 0; n < count; ++n) values(static_cast<Eigen::Index>(n)) = cis_turns(fracs[n]);
    auto spec = spec_of(GeneratorKind::beta_power, count);
    spec.beta = beta;
    return WeightSequence(std::move(values), std::move(spec), 1.0);
}

WeightSequence linear_phase(double alpha, std::size_t count, const Limits& limits) {
    check_capacity(count, limits);
    if (!std::isfinite(alpha)) fail(ErrorKind::config, "linear_phase: alpha must be finite");
    Eigen::VectorXcd values(static_cast<Eigen::Index>(count));
    for (std::size_t n = 0; n < count; ++n) {
        // n * alpha mod 1 with the product's rounding error carried separately
        const double x = static_cast<double>(n);
        const double hi = x * alpha;
        const double lo = std::fma(x, alpha, -hi);
        values(static_cast<Eigen::Index>(n)) = cis_turns((hi - std::floor(hi)) + lo);
    }
    auto spec = spec_of(GeneratorKind::linear_phase, count);
    spec.alpha = alpha;
    return WeightSequence(std::move(values), std::move(spec), 1.0);
}

WeightSequence constant(std::complex<double> value, std::size_t count, const Limits& limits) {
    check_capacity(count, limits);
    if (std::abs(value) > 1.0) fail(ErrorKind::precondition, "constant: |z| must be <= 1");
    Eigen::VectorXcd values = Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(count), value);
    auto spec = spec_of(GeneratorKind::constant, count);
    spec.value = value;
    return WeightSequence(std::move(values), std::move(spec), 1.0);
}

WeightSequence arithmetic_subsequence(const WeightSequence& c, std::uint64_t a, std::uint64_t b) {
    if (a < 1) fail(ErrorKind::precondition, "arithmetic_subsequence: step must be >= 1");
    if (b >= c.size()) fail(ErrorKind::precondition, "arithmetic_subsequence: offset beyond sequence");
    const std::size_t count = (c.size() - b + a - 1) / a;
    Eigen::VectorXcd values(static_cast<Eigen::Index>(count));
    for (std::size_t m = 0; m < count; ++m) values(static_cast<Eigen::Index>(m)) = c[a * m + b];
    GeneratorSpec spec;
    spec.kind = GeneratorKind::subsequence;
    spec.parent = std::make_shared<const GeneratorSpec>(c.provenance());
    spec.step = a;
    spec.offset = b;
    return WeightSequence(std::move(values), std::move(spec), c.sup_norm_bound());
}

WeightSequence from_values(Eigen::VectorXcd values, std::string source) {
    double bound = 0.0;
    for (Eigen::Index n = 0; n < values.size(); ++n) bound = std::max(bound, std::abs(values(n)));
    GeneratorSpec spec;
    spec.kind = GeneratorKind::external;
    spec.source = std::move(source);
    return WeightSequence(std::move(values), std::move(spec), bound);
}

WeightSequence build(const GeneratorSpec& spec, const Limits& limits) {
    switch (spec.kind) {
        case GeneratorKind::mobius: return mobius(spec.length, limits);
        case GeneratorKind::rademacher: return rademacher(spec.length, spec.seed, limits);
        case GeneratorKind::beta_power: return beta_power(spec.beta, spec.length, limits);
        case GeneratorKind::linear_phase: return linear_phase(spec.alpha, spec.length, limits);
        case GeneratorKind::constant: return constant(spec.value, spec.length, limits);
        case GeneratorKind::subsequence: {
            if (!spec.parent) fail(ErrorKind::config, "subsequence spec without parent");
            return arithmetic_subsequence(build(*spec.parent, limits), spec.step, spec.offset);
        }
        case GeneratorKind::external: break;
    }
    fail(ErrorKind::config, "external sequences cannot be regenerated from their spec; load the data file instead");
}

}  // namespace oscillab::seq
