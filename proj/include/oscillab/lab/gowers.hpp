#pragma once

#include "oscillab/core/parallel.hpp"
#include "oscillab/core/serialize.hpp"

#include <Eigen/Core>

namespace oscillab::lab {

enum class GowersMethod { brute, fourier };
const char* gowers_method_name(GowersMethod m) noexcept;

struct GowersResult {
    std::size_t N = 0;
    int k = 1;
    double value = 0.0;
    GowersMethod method = GowersMethod::brute;
};

Json to_json(const GowersResult& r);

inline constexpr double kGowersBudget = 1e9;

/// ||f||_{U^k} over Z_N (indices mod N), k in 1..4. The brute method needs
/// N^{k+1} <= kGowersBudget; the Fourier method is only defined for k = 2.
GowersResult gowers_norm(const Eigen::VectorXcd& f, int k, GowersMethod method = GowersMethod::brute,
                         const ExecPolicy& policy = {});

}  // namespace oscillab::lab
