#pragma once

#include "oscillab/core/cyclotomic.hpp"
#include "oscillab/core/serialize.hpp"
#include "oscillab/dyn/affine_map.hpp"

namespace oscillab::dyn {

/// A^nu = I + N with N^{kappa+1} = 0 and N^kappa != 0.
struct EntropyCert {
    std::uint64_t nu = 1;
    int kappa = 0;
    IntPoly char_poly;
    std::vector<CyclotomicFactor> cyclotomic;
    Endomorphism nilpotent;
    std::uint64_t search_cap = 1;  // largest nu the search would have tried
};

using oscillab::to_json;
Json to_json(const EntropyCert& c);

/// Largest kappa searched: the nilpotency index on 2(d+k) coordinates.
int kappa_bound(const GroupSpec& g);

/// Throws positive_entropy (detail: the non-cyclotomic cofactor as JSON) when
/// the characteristic polynomial of A is not a product of cyclotomic
/// polynomials, cert_search_exceeded if no nu up to the cap works.
EntropyCert entropy_certificate(const Endomorphism& a);
inline EntropyCert entropy_certificate(const AffineMap& t) { return entropy_certificate(t.linear); }

/// Checks A^nu - I - N = 0, N^{kappa+1} = 0, N^kappa != 0 (kappa >= 1).
bool verify_certificate(const Endomorphism& a, const EntropyCert& c);

std::string poly_to_string(const IntPoly& p);

}  // namespace oscillab::dyn
