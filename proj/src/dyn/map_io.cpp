#include "oscillab/dyn/map_io.hpp"

#include "oscillab/core/error.hpp"

#include <fstream>
#include <sstream>

namespace oscillab::dyn {

namespace {

Matrix<BigRat> rational_matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols, const char* what) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows) fail(ErrorKind::config, std::string(what) + ": wrong number of rows");
    Matrix<BigRat> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail(ErrorKind::config, std::string(what) + ": wrong row length");
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = rational_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

std::uint64_t modulus_from_json(const Json& j) {
    const BigInt v = integer_from_json(j);
    if (v < 2 || v > BigInt(std::numeric_limits<std::uint32_t>::max())) fail(ErrorKind::config, "modulus out of range: " + j.dump());
    return static_cast<std::uint64_t>(v);
}

}  // namespace

Json to_json(const GroupSpec& g) { return {{"d", g.d}, {"moduli", g.moduli}}; }

GroupSpec group_from_json(const Json& j) {
    reject_unknown_keys(j, {"d", "moduli"}, "group");
    GroupSpec g;
    if (!j.contains("d") || !j["d"].is_number_integer()) fail(ErrorKind::config, "group: 'd' must be an integer");
    g.d = j["d"].get<int>();
    if (j.contains("moduli")) {
        if (!j["moduli"].is_array()) fail(ErrorKind::config, "group: 'moduli' must be an array");
        for (const auto& m : j["moduli"]) g.moduli.push_back(modulus_from_json(m));
    }
    validate_group(g);
    return g;
}

Json to_json(const GroupPoint& x) {
    Json t = Json::array();
    for (const auto& c : x.torus) t.push_back(to_string(c));
    return {{"torus", t}, {"finite", x.finite}};
}

GroupPoint point_from_json(const GroupSpec& g, const Json& j, bool* approximate) {
    reject_unknown_keys(j, {"torus", "finite"}, "point");
    GroupPoint x = zero_point(g);
    if (j.contains("torus")) {
        const Json& t = j["torus"];
        if (!t.is_array() || t.size() != static_cast<std::size_t>(g.d)) fail(ErrorKind::dimension_mismatch, "point: torus needs d entries");
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i].is_number_float()) {
                if (approximate) *approximate = true;
                x.torus[i] = UnitRational(exact_rational(t[i].get<double>()));
            } else {
                x.torus[i] = UnitRational(rational_from_json(t[i]));
            }
        }
    } else if (g.d > 0) {
        fail(ErrorKind::config, "point: missing 'torus'");
    }
    if (j.contains("finite")) {
        const Json& f = j["finite"];
        if (!f.is_array() || f.size() != g.moduli.size()) fail(ErrorKind::dimension_mismatch, "point: finite needs k entries");
        for (std::size_t i = 0; i < f.size(); ++i)
            x.finite[i] = static_cast<std::uint64_t>(mod_floor(integer_from_json(f[i]), BigInt(g.moduli[i])));
    } else if (g.k() > 0) {
        fail(ErrorKind::config, "point: missing 'finite'");
    }
    return x;
}

Json to_json(const Endomorphism& e) {
    Json mixing = Json::array();
    for (Eigen::Index i = 0; i < e.mixing.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < e.mixing.cols(); ++c) row.push_back(to_string(e.mixing(i, c)));
        mixing.push_back(row);
    }
    return {{"torus_block", to_json(e.torus)}, {"mixing_block", mixing}, {"finite_block", to_json(e.finite)}};
}

Json to_json(const AffineMap& t) {
    Json j = to_json(t.linear);
    j["group"] = to_json(t.group());
    j["translation"] = to_json(t.translation);
    return j;
}

AffineMap map_from_json(const Json& j) {
    reject_unknown_keys(j, {"group", "torus_block", "mixing_block", "finite_block", "translation"}, "map");
    if (!j.contains("group")) fail(ErrorKind::config, "map: missing 'group'");
    const GroupSpec g = group_from_json(j["group"]);
    IntMatrix torus = IntMatrix::Zero(g.d, g.d);
    if (g.d > 0) {
        if (!j.contains("torus_block")) fail(ErrorKind::config, "map: missing 'torus_block'");
        torus = int_matrix_from_json(j["torus_block"]);
    }
    Matrix<BigRat> mixing;
    if (j.contains("mixing_block")) mixing = rational_matrix_from_json(j["mixing_block"], g.d, g.k(), "mixing_block");
    IntMatrix finite;
    if (j.contains("finite_block")) finite = int_matrix_from_json(j["finite_block"]);
    AffineMap t;
    t.linear = make_endomorphism(g, std::move(torus), std::move(mixing), std::move(finite));
    t.translation = j.contains("translation") ? point_from_json(g, j["translation"], &t.approximate) : zero_point(g);
    validate_map(t);
    return t;
}

AffineMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open map file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return map_from_json(Json::parse(ss.str()));
    } catch (const Json::exception& e) {
        fail(ErrorKind::config, path + ": " + e.what());
    }
}

}  // namespace oscillab::dyn
