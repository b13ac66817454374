#pragma once

#include "oscillab/core/parallel.hpp"
#include "oscillab/core/serialize.hpp"
#include "oscillab/expsum/weighted_sum.hpp"

#include <cstdint>
#include <vector>

namespace oscillab::lab {

/// Residuals of the residue-class identities for a prime modulus p:
///   decomposition   |S_N - sum_j S_{N,j}|
///   twist[u]        |S_N^u - sum_j w^{ju} S_{N,j}|,  w = e^{2 pi i/p}
///   reconstruction  |S_{N,0} - (1/p) sum_{u=0}^{p-1} S_N^u|
struct PoVerification {
    std::uint64_t p = 2;
    std::size_t N = 0;
    Json phase;
    double decomposition = 0.0;
    std::vector<double> twist;
    double reconstruction = 0.0;

    double max_residual() const;
};

Json to_json(const PoVerification& v);

bool is_prime(std::uint64_t n) noexcept;

PoVerification verify_po(const seq::WeightSequence& c, std::uint64_t p, const expsum::PhasePoly& P, std::size_t N,
                         const ExecPolicy& policy = {});

}  // namespace oscillab::lab
