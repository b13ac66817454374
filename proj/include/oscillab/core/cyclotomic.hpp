#pragma once

#include "oscillab/core/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace oscillab {

std::uint64_t euler_phi(std::uint64_t n);

/// n-th cyclotomic polynomial, by exact division of x^n - 1 by Phi_d, d | n, d < n.
IntPoly cyclotomic(std::uint64_t n);

/// Every n with phi(n) <= max_degree, ascending.
std::vector<std::uint64_t> cyclotomic_orders_up_to(int max_degree);

struct CyclotomicFactor {
    std::uint64_t order;
    int multiplicity;
    friend bool operator==(const CyclotomicFactor&, const CyclotomicFactor&) = default;
};

struct CyclotomicFactorization {
    std::vector<CyclotomicFactor> factors;
    bool complete = false;
    // What is left after removing every cyclotomic factor; 1 iff complete.
    IntPoly cofactor;
};

CyclotomicFactorization cyclotomic_factor(const IntPoly& p);

/// Product of Phi_n^multiplicity over the listed factors.
IntPoly reconstruct(const CyclotomicFactorization& factorization);

}  // namespace oscillab
