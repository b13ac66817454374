#pragma once

#include <cstddef>

namespace oscillab {

// Construction-time caps on user-supplied objects.
struct Limits {
    int max_degree = 12;     // phase and orbit polynomials
    int max_dimension = 8;   // d + k of a group T^d x F
    std::size_t max_finite_order = 1'000'000;  // |F| for enumeration checks
    std::size_t max_sequence_length = std::size_t{1} << 27;
    long max_precision_bits = 1'000'000;
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

}  // namespace oscillab
