#include "oscillab/lab/po_verify.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/core/turns.hpp"

#include <algorithm>

namespace oscillab::lab {

using cplx = std::complex<double>;

double PoVerification::max_residual() const {
    double m = std::max(decomposition, reconstruction);
    for (double t : twist) m = std::max(m, t);
    return m;
}

Json to_json(const PoVerification& v) {
    return {{"p", v.p},
            {"N", v.N},
            {"phase", v.phase},
            {"residuals", {{"decomposition", v.decomposition}, {"twist", v.twist}, {"reconstruction", v.reconstruction}}},
            {"reconstruction_range", "u=0..p-1"},
            {"max_residual", v.max_residual()}};
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PoVerification verify_po(const seq::WeightSequence& c, std::uint64_t p, const expsum::PhasePoly& P, std::size_t N,
                         const ExecPolicy& policy) {
    if (!is_prime(p)) fail(ErrorKind::not_prime, std::to_string(p) + " is not prime", std::to_string(p));
    const cplx total = expsum::weighted_sum(c, P, N, policy).value;
    const auto parts = expsum::residue_sums(c, P, p, N, policy);

    PoVerification out;
    out.p = p;
    out.N = N;
    out.phase = P.to_json();

    cplx regrouped{};
    for (const auto& s : parts) regrouped += s;
    out.decomposition = std::abs(total - regrouped);

    cplx twist_mean{};
    for (std::uint64_t u = 0; u < p; ++u) {
        const cplx twisted = expsum::twisted_sum(c, P, p, u, N, policy);
        cplx expanded{};
        for (std::uint64_t j = 0; j < p; ++j)
            expanded += cis_turns(static_cast<double>((j * u) % p) / static_cast<double>(p)) * parts[j];
        out.twist.push_back(std::abs(twisted - expanded));
        twist_mean += twisted;
    }
    out.reconstruction = std::abs(parts[0] - twist_mean / static_cast<double>(p));
    return out;
}

}  // namespace oscillab::lab
