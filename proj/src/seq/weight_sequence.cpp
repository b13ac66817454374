#include "oscillab/seq/weight_sequence.hpp"

#include "oscillab/core/error.hpp"

#include <cmath>
#include <sstream>

namespace oscillab::seq {

const char* kind_name(GeneratorKind kind) noexcept {
    switch (kind) {
        case GeneratorKind::mobius: return "mobius";
        case GeneratorKind::rademacher: return "rademacher";
        case GeneratorKind::beta_power: return "beta_power";
        case GeneratorKind::linear_phase: return "linear_phase";
        case GeneratorKind::constant: return "constant";
        case GeneratorKind::subsequence: return "subsequence";
        case GeneratorKind::external: return "external";
    }
    return "unknown";
}

namespace {

GeneratorKind kind_from_name(const std::string& name) {
    for (auto k : {GeneratorKind::mobius, GeneratorKind::rademacher, GeneratorKind::beta_power, GeneratorKind::linear_phase,
                   GeneratorKind::constant, GeneratorKind::subsequence, GeneratorKind::external})
        if (name == kind_name(k)) return k;
    fail(ErrorKind::config, "unknown generator kind '" + name + "'");
}

std::uint64_t as_u64(const Json& j, const char* key) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::uint64_t>(j.get<long long>());
    if (j.is_string()) {
        const BigInt z = parse_integer(j.get<std::string>());
        if (z >= 0 && z <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(z);
    }
    fail(ErrorKind::config, std::string("generator field '") + key + "' must be a nonnegative integer");
}

double as_double(const Json& j, const char* key) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return static_cast<double>(parse_rational(j.get<std::string>()));
    fail(ErrorKind::config, std::string("generator field '") + key + "' must be a number");
}

}  // namespace

bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) {
    const bool parents_equal = (!a.parent && !b.parent) || (a.parent && b.parent && *a.parent == *b.parent);
    return a.kind == b.kind && a.length == b.length && a.beta == b.beta && a.alpha == b.alpha && a.value == b.value &&
           a.seed == b.seed && parents_equal && a.step == b.step && a.offset == b.offset && a.source == b.source;
}

Json to_json(const GeneratorSpec& spec) {
    Json j;
    j["kind"] = kind_name(spec.kind);
    j["N"] = spec.length;
    switch (spec.kind) {
        case GeneratorKind::rademacher:
            j["seed"] = spec.seed;
            j["prng"] = kRademacherPrng;
            break;
        case GeneratorKind::beta_power: j["beta"] = spec.beta; break;
        case GeneratorKind::linear_phase: j["alpha"] = spec.alpha; break;
        case GeneratorKind::constant:
            j["re"] = spec.value.real();
            j["im"] = spec.value.imag();
            break;
        case GeneratorKind::subsequence:
            j["a"] = spec.step;
            j["b"] = spec.offset;
            j["parent"] = to_json(*spec.parent);
            break;
        case GeneratorKind::external: j["source"] = spec.source; break;
        case GeneratorKind::mobius: break;
    }
    return j;
}

GeneratorSpec generator_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) fail(ErrorKind::config, "generator spec needs a 'kind'");
    GeneratorSpec spec;
    spec.kind = kind_from_name(j.at("kind").get<std::string>());
    switch (spec.kind) {
        case GeneratorKind::mobius: reject_unknown_keys(j, {"kind", "N"}, "mobius"); break;
        case GeneratorKind::rademacher:
            reject_unknown_keys(j, {"kind", "N", "seed", "prng"}, "rademacher");
            if (j.contains("prng") && j.at("prng") != kRademacherPrng)
                fail(ErrorKind::config, "rademacher: unsupported prng " + j.at("prng").dump());
            spec.seed = j.contains("seed") ? as_u64(j.at("seed"), "seed") : 0;
            break;
        case GeneratorKind::beta_power:
            reject_unknown_keys(j, {"kind", "N", "beta"}, "beta_power");
            if (!j.contains("beta") || !j.at("beta").is_string()) fail(ErrorKind::config, "beta_power: 'beta' must be a string");
            spec.beta = j.at("beta").get<std::string>();
            break;
        case GeneratorKind::linear_phase:
            reject_unknown_keys(j, {"kind", "N", "alpha"}, "linear_phase");
            if (!j.contains("alpha")) fail(ErrorKind::config, "linear_phase: missing 'alpha'");
            spec.alpha = as_double(j.at("alpha"), "alpha");
            break;
        case GeneratorKind::constant:
            reject_unknown_keys(j, {"kind", "N", "re", "im"}, "constant");
            spec.value = {j.contains("re") ? as_double(j.at("re"), "re") : 1.0, j.contains("im") ? as_double(j.at("im"), "im") : 0.0};
            break;
        case GeneratorKind::subsequence: {
            reject_unknown_keys(j, {"kind", "N", "a", "b", "parent"}, "subsequence");
            if (!j.contains("parent")) fail(ErrorKind::config, "subsequence: missing 'parent'");
            spec.parent = std::make_shared<const GeneratorSpec>(generator_from_json(j.at("parent")));
            spec.step = j.contains("a") ? as_u64(j.at("a"), "a") : 1;
            spec.offset = j.contains("b") ? as_u64(j.at("b"), "b") : 0;
            break;
        }
        case GeneratorKind::external:
            reject_unknown_keys(j, {"kind", "N", "source"}, "external");
            spec.source = j.value("source", "");
            break;
    }
    if (j.contains("N")) spec.length = as_u64(j.at("N"), "N");
    else if (spec.kind != GeneratorKind::subsequence) fail(ErrorKind::config, "generator spec needs 'N'");
    return spec;
}

GeneratorSpec parse_generator(std::string_view text) {
    const auto colon = text.find(':');
    Json j;
    j["kind"] = std::string(text.substr(0, colon));
    if (colon != std::string_view::npos) {
        std::string rest(text.substr(colon + 1));
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) fail(ErrorKind::config, "generator option '" + item + "' is not key=value");
            j[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    return generator_from_json(j);
}

WeightSequence::WeightSequence(Eigen::VectorXcd values, GeneratorSpec provenance, double sup_norm_bound)
    : values_(std::move(values)), provenance_(std::move(provenance)), sup_norm_bound_(sup_norm_bound) {
    provenance_.length = static_cast<std::size_t>(values_.size());
    const double slack = 1e-12 * std::max(1.0, sup_norm_bound_);
    for (Eigen::Index n = 0; n < values_.size(); ++n) {
        const double modulus = std::abs(values_(n));
        if (!std::isfinite(modulus) || modulus > sup_norm_bound_ + slack)
            fail(ErrorKind::internal, "weight sequence value exceeds its sup-norm bound at n = " + std::to_string(n));
    }
}

}  // namespace oscillab::seq
