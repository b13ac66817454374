#pragma once

// Gowers norm straight from the definition: average over x, h_1..h_k of the
// product over all 2^k corners, conjugating corners with odd |eps|.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

inline double gowers_direct(const std::vector<std::complex<double>>& f, int k) {
    const std::size_t n = f.size();
    std::vector<std::size_t> h(static_cast<std::size_t>(k), 0);
    std::complex<long double> total = 0;
    while (true) {
        for (std::size_t x = 0; x < n; ++x) {
            std::complex<long double> prod = 1;
            for (unsigned eps = 0; eps < (1u << k); ++eps) {
                std::size_t idx = x;
                int weight = 0;
                for (int i = 0; i < k; ++i)
                    if (eps >> i & 1u) {
                        idx += h[static_cast<std::size_t>(i)];
                        ++weight;
                    }
                std::complex<long double> v(f[idx % n].real(), f[idx % n].imag());
                prod *= (weight % 2) ? std::conj(v) : v;
            }
            total += prod;
        }
        std::size_t i = 0;
        while (i < h.size() && ++h[i] == n) h[i++] = 0;
        if (i == h.size()) break;
    }
    const long double mean = total.real() / std::pow(static_cast<long double>(n), k + 1);
    return static_cast<double>(std::pow(std::max(mean, 0.0L), 1.0L / (1 << k)));
}

}  // namespace oracle
