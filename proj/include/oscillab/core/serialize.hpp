#pragma once

#include "oscillab/core/int_matrix.hpp"
#include "oscillab/core/polynomial.hpp"
#include "oscillab/core/unit_rational.hpp"

#include <nlohmann/json.hpp>

namespace oscillab {

using Json = nlohmann::json;

// Polynomials: ascending-degree arrays of "p/q" strings.
Json to_json(const RationalPoly& p);
Json to_json(const IntPoly& p);
RationalPoly rational_poly_from_json(const Json& j);
IntPoly int_poly_from_json(const Json& j);

// Matrices: row-major arrays of rows of integer strings.
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

BigRat rational_from_json(const Json& j);
BigInt integer_from_json(const Json& j);

// Throws ErrorKind::config naming the first key of `object` not in `allowed`.
void reject_unknown_keys(const Json& object, std::initializer_list<const char*> allowed, const char* context);

}  // namespace oscillab
