#include "oscillab/core/cyclotomic.hpp"

#include "oscillab/core/error.hpp"

#include <map>
#include <mutex>

namespace oscillab {

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

IntPoly compute_cyclotomic(std::uint64_t n);

// Memo shared across threads; entries are immutable once inserted.
const IntPoly& cached_cyclotomic(std::uint64_t n) {
    static std::mutex mutex;
    static std::map<std::uint64_t, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly value = compute_cyclotomic(n);
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(value)).first->second;
}

IntPoly compute_cyclotomic(std::uint64_t n) {
    IntPoly p = IntPoly::monomial(n) - IntPoly::constant(1);
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod_monic(p, cached_cyclotomic(d));
        if (!r.is_zero()) fail(ErrorKind::internal, "cyclotomic: inexact division");
        p = std::move(q);
    }
    return p;
}

}  // namespace

IntPoly cyclotomic(std::uint64_t n) {
    if (n == 0) fail(ErrorKind::precondition, "cyclotomic: n must be >= 1");
    return cached_cyclotomic(n);
}

std::vector<std::uint64_t> cyclotomic_orders_up_to(int max_degree) {
    std::vector<std::uint64_t> out;
    if (max_degree < 1) return out;
    // phi(n) >= sqrt(n/2), so phi(n) <= k forces n <= 2k^2.
    const auto k = static_cast<std::uint64_t>(max_degree);
    const std::uint64_t bound = std::max<std::uint64_t>(2 * k * k, 6);
    for (std::uint64_t n = 1; n <= bound; ++n)
        if (euler_phi(n) <= k) out.push_back(n);
    return out;
}

CyclotomicFactorization cyclotomic_factor(const IntPoly& p) {
    if (p.degree() < 1 || !p.is_monic()) fail(ErrorKind::precondition, "cyclotomic_factor: expects a monic polynomial of degree >= 1");
    CyclotomicFactorization out;
    IntPoly rest = p;
    for (std::uint64_t n : cyclotomic_orders_up_to(p.degree())) {
        const IntPoly& phi = cached_cyclotomic(n);
        int multiplicity = 0;
        while (rest.degree() >= phi.degree()) {
            auto [q, r] = divmod_monic(rest, phi);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++multiplicity;
        }
        if (multiplicity > 0) out.factors.push_back({n, multiplicity});
    }
    out.complete = rest == IntPoly::constant(1);
    out.cofactor = std::move(rest);
    return out;
}

IntPoly reconstruct(const CyclotomicFactorization& factorization) {
    IntPoly product = IntPoly::constant(1);
    for (const auto& f : factorization.factors) product = product * pow(cyclotomic(f.order), static_cast<unsigned>(f.multiplicity));
    return product;
}

}  // namespace oscillab
