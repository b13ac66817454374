#include "oscillab/core/serialize.hpp"

#include "oscillab/core/error.hpp"

#include <string>

namespace oscillab {

BigRat rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return BigRat(BigInt(j.get<long long>()));
    fail(ErrorKind::config, "expected a rational string \"p/q\", got " + j.dump());
}

BigInt integer_from_json(const Json& j) {
    if (j.is_string()) return parse_integer(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    fail(ErrorKind::config, "expected an integer string, got " + j.dump());
}

Json to_json(const RationalPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

Json to_json(const IntPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

RationalPoly rational_poly_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::config, "polynomial must be a JSON array of coefficient strings");
    std::vector<BigRat> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return RationalPoly(std::move(coeffs));
}

IntPoly int_poly_from_json(const Json& j) {
    const RationalPoly p = rational_poly_from_json(j);
    std::vector<BigInt> coeffs;
    for (const auto& c : p.coefficients()) {
        if (denominator_of(c) != 1) fail(ErrorKind::invalid_polynomial, "integer polynomial has non-integer coefficient " + to_string(c));
        coeffs.push_back(numerator_of(c));
    }
    return IntPoly(std::move(coeffs));
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::config, "matrix must be an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.front().size());
    IntMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail(ErrorKind::config, "matrix rows must have equal length");
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = integer_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

void reject_unknown_keys(const Json& object, std::initializer_list<const char*> allowed, const char* context) {
    if (!object.is_object()) fail(ErrorKind::config, std::string(context) + ": expected a JSON object");
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) fail(ErrorKind::config, std::string(context) + ": unknown key '" + key + "'");
    }
}

}  // namespace oscillab
