#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace oscillab {

/// e^{2 pi i t}. The argument is reduced to a quarter turn first, so multiples
/// of 1/4 map to exact values and large |t| loses no more than the reduction.
inline std::complex<double> cis_turns(double t) {
    t -= std::floor(t);
    const double scaled = 4.0 * t;
    double quadrant = std::floor(scaled);
    double r = scaled - quadrant;  // in [0, 1)
    const double angle = r * (std::numbers::pi / 2.0);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    switch (static_cast<int>(quadrant) & 3) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

}  // namespace oscillab
