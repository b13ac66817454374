#include "oscillab/lab/gowers.hpp"

#include "oscillab/core/error.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <vector>

namespace oscillab::lab {

namespace {

using cplx = std::complex<double>;

// ||g||_{U^k}^{2^k} via ||g||_{U^k}^{2^k} = E_h ||g(.) conj g(.+h)||_{U^{k-1}}^{2^{k-1}}
// and ||g||_{U^1}^2 = |E g|^2.
double power_sum(const std::vector<cplx>& g, int k) {
    const std::size_t n = g.size();
    if (k == 1) {
        const cplx mean = pairwise_sum(std::span<const cplx>(g)) / static_cast<double>(n);
        return std::norm(mean);
    }
    std::vector<double> per_shift(n);
    std::vector<cplx> dg(n);
    for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t x = 0; x < n; ++x) dg[x] = g[x] * std::conj(g[(x + h) % n]);
        per_shift[h] = power_sum(dg, k - 1);
    }
    return pairwise_sum(std::span<const double>(per_shift)) / static_cast<double>(n);
}

double brute(const std::vector<cplx>& f, int k, const ExecPolicy& policy) {
    const std::size_t n = f.size();
    if (k == 1) return std::sqrt(power_sum(f, 1));
    // outermost shift split across workers; partials combined in shift order
    std::vector<double> per_shift(n);
    for_each_block(n, policy.threads, [&](std::size_t h) {
        std::vector<cplx> dg(n);
        for (std::size_t x = 0; x < n; ++x) dg[x] = f[x] * std::conj(f[(x + h) % n]);
        per_shift[h] = power_sum(dg, k - 1);
    });
    const double total = pairwise_sum(std::span<const double>(per_shift)) / static_cast<double>(n);
    return std::pow(std::max(total, 0.0), 1.0 / static_cast<double>(1 << k));
}

double fourier_u2(const std::vector<cplx>& f) {
    Eigen::FFT<double> fft;
    std::vector<cplx> spectrum;
    fft.fwd(spectrum, f);
    const double n = static_cast<double>(f.size());
    std::vector<double> fourth(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const double a = std::norm(spectrum[i] / n);
        fourth[i] = a * a;
    }
    return std::pow(pairwise_sum(std::span<const double>(fourth)), 0.25);
}

}  // namespace

const char* gowers_method_name(GowersMethod m) noexcept { return m == GowersMethod::brute ? "brute" : "fourier"; }

Json to_json(const GowersResult& r) {
    return {{"N", r.N}, {"k", r.k}, {"value", r.value}, {"method", gowers_method_name(r.method)}, {"convention", "Z_N cyclic"}};
}

GowersResult gowers_norm(const Eigen::VectorXcd& f, int k, GowersMethod method, const ExecPolicy& policy) {
    const auto n = static_cast<std::size_t>(f.size());
    if (n < 2) fail(ErrorKind::precondition, "gowers_norm needs N >= 2");
    if (k < 1 || k > 4) fail(ErrorKind::precondition, "gowers_norm supports k = 1..4");
    const std::vector<cplx> values(f.data(), f.data() + f.size());

    GowersResult r;
    r.N = n;
    r.k = k;
    r.method = method;
    if (method == GowersMethod::fourier) {
        if (k != 2) fail(ErrorKind::precondition, "the Fourier method is only available for k = 2");
        r.value = fourier_u2(values);
        return r;
    }
    const double cost = std::pow(static_cast<double>(n), k + 1);
    if (cost > kGowersBudget)
        fail(ErrorKind::budget, "brute U^" + std::to_string(k) + " on N = " + std::to_string(n) + " exceeds the 1e9 operation budget",
             k == 2 ? "use --method fourier" : "");
    r.value = brute(values, k, policy);
    return r;
}

}  // namespace oscillab::lab
