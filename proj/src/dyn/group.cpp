#include "oscillab/dyn/group.hpp"

#include "oscillab/core/error.hpp"

namespace oscillab::dyn {

void validate_group(const GroupSpec& g, const Limits& limits) {
    if (g.d < 0) fail(ErrorKind::config, "torus dimension must be >= 0");
    if (g.rank() < 1) fail(ErrorKind::config, "group needs d + k >= 1");
    if (g.rank() > limits.max_dimension)
        fail(ErrorKind::capacity, "d + k = " + std::to_string(g.rank()) + " exceeds the dimension cap " + std::to_string(limits.max_dimension));
    for (auto m : g.moduli)
        if (m < 2) fail(ErrorKind::config, "finite moduli must be >= 2");
}

std::uint64_t finite_order(const GroupSpec& g, const Limits& limits) {
    std::uint64_t order = 1;
    for (auto m : g.moduli) {
        if (order > limits.max_finite_order / m)
            fail(ErrorKind::capacity, "|F| exceeds the enumeration cap " + std::to_string(limits.max_finite_order));
        order *= m;
    }
    return order;
}

std::uint64_t moduli_lcm(const GroupSpec& g) {
    BigInt l = 1;
    for (auto m : g.moduli) l = lcm(l, BigInt(m));
    return static_cast<std::uint64_t>(l);
}

GroupSpec doubled(const GroupSpec& g) {
    GroupSpec out{2 * g.d, g.moduli};
    out.moduli.insert(out.moduli.end(), g.moduli.begin(), g.moduli.end());
    return out;
}

GroupPoint zero_point(const GroupSpec& g) {
    return {std::vector<UnitRational>(static_cast<std::size_t>(g.d)), std::vector<std::uint64_t>(g.moduli.size(), 0)};
}

void check_point(const GroupSpec& g, const GroupPoint& x) {
    if (x.torus.size() != static_cast<std::size_t>(g.d) || x.finite.size() != g.moduli.size())
        fail(ErrorKind::dimension_mismatch, "point has shape (" + std::to_string(x.torus.size()) + "," + std::to_string(x.finite.size()) +
                                                "), group has (" + std::to_string(g.d) + "," + std::to_string(g.k()) + ")");
    for (std::size_t i = 0; i < x.finite.size(); ++i)
        if (x.finite[i] >= g.moduli[i]) fail(ErrorKind::config, "finite coordinate not reduced mod its modulus");
}

GroupPoint add(const GroupSpec& g, const GroupPoint& a, const GroupPoint& b) {
    GroupPoint out = a;
    for (std::size_t i = 0; i < out.torus.size(); ++i) out.torus[i] += b.torus[i];
    for (std::size_t i = 0; i < out.finite.size(); ++i) out.finite[i] = (a.finite[i] + b.finite[i]) % g.moduli[i];
    return out;
}

GroupPoint negate(const GroupSpec& g, const GroupPoint& a) {
    GroupPoint out = a;
    for (auto& t : out.torus) t = -t;
    for (std::size_t i = 0; i < out.finite.size(); ++i) out.finite[i] = (g.moduli[i] - a.finite[i]) % g.moduli[i];
    return out;
}

GroupPoint scale(const GroupSpec& g, const BigInt& s, const GroupPoint& x) {
    GroupPoint out = x;
    for (auto& t : out.torus) t = s * t;
    for (std::size_t i = 0; i < out.finite.size(); ++i) {
        const BigInt m(g.moduli[i]);
        out.finite[i] = static_cast<std::uint64_t>(mod_floor(mod_floor(s, m) * BigInt(x.finite[i]), m));
    }
    return out;
}

GroupPoint pair(const GroupSpec&, const GroupPoint& x1, const GroupPoint& x2) {
    GroupPoint out = x1;
    out.torus.insert(out.torus.end(), x2.torus.begin(), x2.torus.end());
    out.finite.insert(out.finite.end(), x2.finite.begin(), x2.finite.end());
    return out;
}

GroupPoint first_component(const GroupSpec& g, const GroupPoint& z) {
    const auto d = static_cast<std::size_t>(g.d);
    const auto k = g.moduli.size();
    return {{z.torus.begin(), z.torus.begin() + static_cast<std::ptrdiff_t>(d)},
            {z.finite.begin(), z.finite.begin() + static_cast<std::ptrdiff_t>(k)}};
}

GroupPoint second_component(const GroupSpec& g, const GroupPoint& z) {
    const auto d = static_cast<std::size_t>(g.d);
    const auto k = g.moduli.size();
    return {{z.torus.begin() + static_cast<std::ptrdiff_t>(d), z.torus.end()},
            {z.finite.begin() + static_cast<std::ptrdiff_t>(k), z.finite.end()}};
}

BigInt torus_denominator(const GroupPoint& x) {
    BigInt l = 1;
    for (const auto& t : x.torus) l = lcm(l, t.denominator());
    return l;
}

std::string to_string(const GroupPoint& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.torus.size(); ++i) s += (i ? "," : "") + to_string(x.torus[i]);
    s += " | ";
    for (std::size_t i = 0; i < x.finite.size(); ++i) s += (i ? "," : "") + std::to_string(x.finite[i]);
    return s + ")";
}

}  // namespace oscillab::dyn
