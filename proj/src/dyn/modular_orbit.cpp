#include "oscillab/dyn/modular_orbit.hpp"

namespace oscillab::dyn {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t residue(const BigInt& a, std::uint64_t m) { return static_cast<std::uint64_t>(mod_floor(a, BigInt(m))); }

// numerator of t scaled to denominator D
std::uint64_t scaled(const BigRat& t, const BigInt& D) {
    const BigInt v = numerator_of(t) * (D / denominator_of(t));
    return static_cast<std::uint64_t>(mod_floor(v, D));
}

}  // namespace

std::optional<ModularOrbit> ModularOrbit::create(const AffineMap& t, const GroupPoint& x) {
    const GroupSpec& g = t.group();
    check_point(g, x);
    BigInt D = lcm(torus_denominator(x), torus_denominator(t.translation));
    for (Eigen::Index i = 0; i < t.linear.mixing.rows(); ++i)
        for (Eigen::Index j = 0; j < t.linear.mixing.cols(); ++j) D = lcm(D, denominator_of(t.linear.mixing(i, j)));
    if (D >= kMaxModulus) return std::nullopt;
    for (auto m : g.moduli)
        if (m >= kMaxModulus) return std::nullopt;

    ModularOrbit o;
    o.d_ = g.d;
    o.denom_ = static_cast<std::uint64_t>(D);
    const std::size_t w = static_cast<std::size_t>(g.rank());
    o.mod_.assign(static_cast<std::size_t>(g.d), o.denom_);
    o.mod_.insert(o.mod_.end(), g.moduli.begin(), g.moduli.end());

    Affine base{std::vector<std::uint64_t>(w * w, 0), std::vector<std::uint64_t>(w, 0)};
    for (int i = 0; i < g.d; ++i) {
        for (int j = 0; j < g.d; ++j) base.m[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(j)] = residue(t.linear.torus(i, j), o.denom_);
        for (int j = 0; j < g.k(); ++j)
            base.m[static_cast<std::size_t>(i) * w + static_cast<std::size_t>(g.d + j)] = scaled(t.linear.mixing(i, j), D);
        base.c[static_cast<std::size_t>(i)] = scaled(t.translation.torus[static_cast<std::size_t>(i)].value(), D);
    }
    for (int i = 0; i < g.k(); ++i) {
        const std::size_t row = static_cast<std::size_t>(g.d + i);
        for (int j = 0; j < g.k(); ++j)
            base.m[row * w + static_cast<std::size_t>(g.d + j)] = residue(t.linear.finite(i, j), g.moduli[static_cast<std::size_t>(i)]);
        base.c[row] = t.translation.finite[static_cast<std::size_t>(i)];
    }
    o.powers_.push_back(std::move(base));
    for (int i = 1; i < 64; ++i) o.powers_.push_back(o.compose(o.powers_.back(), o.powers_.back()));

    for (int i = 0; i < g.d; ++i) o.start_.push_back(scaled(x.torus[static_cast<std::size_t>(i)].value(), D));
    o.start_.insert(o.start_.end(), x.finite.begin(), x.finite.end());
    return o;
}

ModularOrbit::Affine ModularOrbit::compose(const Affine& a, const Affine& b) const {
    const std::size_t w = mod_.size();
    Affine out{std::vector<std::uint64_t>(w * w, 0), std::vector<std::uint64_t>(w, 0)};
    for (std::size_t i = 0; i < w; ++i) {
        const std::uint64_t m = mod_[i];
        for (std::size_t j = 0; j < w; ++j) {
            u128 acc = 0;
            for (std::size_t l = 0; l < w; ++l) acc = (acc + static_cast<u128>(a.m[i * w + l]) * b.m[l * w + j]) % m;
            out.m[i * w + j] = static_cast<std::uint64_t>(acc);
        }
        u128 acc = a.c[i];
        for (std::size_t l = 0; l < w; ++l) acc = (acc + static_cast<u128>(a.m[i * w + l]) * b.c[l]) % m;
        out.c[i] = static_cast<std::uint64_t>(acc);
    }
    return out;
}

void ModularOrbit::apply(const Affine& a, const std::vector<std::uint64_t>& v, std::vector<std::uint64_t>& out) const {
    const std::size_t w = mod_.size();
    for (std::size_t i = 0; i < w; ++i) {
        u128 acc = a.c[i];
        for (std::size_t l = 0; l < w; ++l) {
            acc += static_cast<u128>(a.m[i * w + l]) * v[l];  // each product < 2^124
            if (acc >> 125) acc %= mod_[i];
        }
        out[i] = static_cast<std::uint64_t>(acc % mod_[i]);
    }
}

void ModularOrbit::state(std::uint64_t n, std::vector<std::uint64_t>& out) const {
    out = start_;
    std::vector<std::uint64_t> tmp(out.size());
    for (int i = 0; n != 0; ++i, n >>= 1) {
        if ((n & 1u) == 0) continue;
        apply(powers_[static_cast<std::size_t>(i)], out, tmp);
        out.swap(tmp);
    }
}

void ModularOrbit::step(std::vector<std::uint64_t>& v) const {
    std::vector<std::uint64_t> tmp(v.size());
    apply(powers_[0], v, tmp);
    v.swap(tmp);
}

GroupPoint ModularOrbit::to_point(const std::vector<std::uint64_t>& v) const {
    GroupPoint p;
    for (int i = 0; i < d_; ++i) p.torus.emplace_back(BigInt(v[static_cast<std::size_t>(i)]), BigInt(denom_));
    p.finite.assign(v.begin() + d_, v.end());
    return p;
}

}  // namespace oscillab::dyn
