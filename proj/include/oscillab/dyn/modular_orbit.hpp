#pragma once

#include "oscillab/dyn/affine_map.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oscillab::dyn {

/// Orbit of one rational point under an affine map, in machine integers.
///
/// With D the lcm of every torus denominator involved (point, translation,
/// mixing block), the orbit stays in (1/D Z / Z)^d x F, so a state is d
/// numerators mod D followed by k residues. Arithmetic is exact. Powers
/// T^{2^i} are precomputed, so any T^n x costs O(log n) matrix-vector steps.
class ModularOrbit {
   public:
    /// Empty when D (or a modulus) does not fit below 2^62.
    static std::optional<ModularOrbit> create(const AffineMap& t, const GroupPoint& x);

    std::uint64_t denominator() const noexcept { return denom_; }
    std::size_t width() const noexcept { return mod_.size(); }
    const std::vector<std::uint64_t>& row_moduli() const noexcept { return mod_; }
    const std::vector<std::uint64_t>& start() const noexcept { return start_; }

    /// out := state of T^n x; out.size() == width().
    void state(std::uint64_t n, std::vector<std::uint64_t>& out) const;
    /// v := T v.
    void step(std::vector<std::uint64_t>& v) const;
    GroupPoint to_point(const std::vector<std::uint64_t>& v) const;

   private:
    struct Affine {
        std::vector<std::uint64_t> m;  // width x width, row-major, row i mod mod_[i]
        std::vector<std::uint64_t> c;
    };
    Affine compose(const Affine& a, const Affine& b) const;
    void apply(const Affine& a, const std::vector<std::uint64_t>& v, std::vector<std::uint64_t>& out) const;

    int d_ = 0;
    std::uint64_t denom_ = 1;
    std::vector<std::uint64_t> mod_;
    std::vector<Affine> powers_;
    std::vector<std::uint64_t> start_;
};

}  // namespace oscillab::dyn
