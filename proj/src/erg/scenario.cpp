#include "oscillab/erg/scenario.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/dyn/map_io.hpp"
#include "oscillab/seq/generators.hpp"
#include "oscillab/seq/sequence_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace oscillab::erg {

namespace {

namespace fs = std::filesystem;

std::string resolve(const std::string& base, const std::string& path) {
    const fs::path p(path);
    if (p.is_absolute()) return path;
    const fs::path joined = fs::path(base) / p;
    std::error_code ec;
    return fs::exists(joined, ec) ? joined.string() : path;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::exception& e) {
        fail(ErrorKind::config, path + ": " + e.what());
    }
}

std::vector<std::size_t> grid_from_json(const Json& j) {
    if (j.is_string()) return expsum::parse_grid(j.get<std::string>());
    reject_unknown_keys(j, {"start", "factor", "count"}, "grid");
    if (!j.contains("start") || !j.contains("factor") || !j.contains("count")) fail(ErrorKind::config, "grid needs start, factor, count");
    return expsum::geometric_grid(j["start"].get<std::size_t>(), j["factor"].get<double>(), j["count"].get<std::size_t>());
}

}  // namespace

Scenario scenario_from_json(const Json& j, const std::string& base_dir) {
    reject_unknown_keys(j, {"map", "point", "characters", "polynomials", "weights", "grid", "trig", "residues", "m_range"}, "scenario");
    Scenario s;
    s.base_dir = base_dir;
    if (!j.contains("map")) fail(ErrorKind::config, "scenario: missing 'map'");
    s.map = j["map"].is_string() ? dyn::load_map(resolve(base_dir, j["map"].get<std::string>())) : dyn::map_from_json(j["map"]);
    const dyn::GroupSpec& g = s.map.group();
    s.point = j.contains("point") ? dyn::point_from_json(g, j["point"]) : dyn::zero_point(g);

    if (!j.contains("characters") || !j["characters"].is_array()) fail(ErrorKind::config, "scenario: 'characters' must be an array");
    for (const auto& c : j["characters"]) s.characters.push_back(character_from_json(g, c));
    if (!j.contains("polynomials") || !j["polynomials"].is_array()) fail(ErrorKind::config, "scenario: 'polynomials' must be an array");
    for (const auto& q : j["polynomials"]) s.polynomials.push_back(int_poly_from_json(q));
    if (s.characters.size() != s.polynomials.size())
        fail(ErrorKind::config, "scenario: need as many characters as polynomials");

    if (j.contains("weights")) s.weights = j["weights"];
    if (j.contains("grid")) s.grid = grid_from_json(j["grid"]);
    if (j.contains("trig")) {
        TrigPoly f;
        for (const auto& term : j["trig"]) {
            reject_unknown_keys(term, {"re", "im", "characters"}, "trig term");
            TrigTerm t{{term.value("re", 0.0), term.value("im", 0.0)}, {}};
            for (const auto& c : term.at("characters")) t.characters.push_back(character_from_json(g, c));
            if (t.characters.size() != s.polynomials.size()) fail(ErrorKind::config, "trig term needs one character per polynomial");
            f.terms.push_back(std::move(t));
        }
        s.trig = std::move(f);
    }
    if (j.contains("residues")) s.residues = j["residues"].get<std::uint64_t>();
    if (j.contains("m_range")) {
        reject_unknown_keys(j["m_range"], {"first", "count"}, "m_range");
        if (j["m_range"].contains("first")) s.m_first = integer_from_json(j["m_range"]["first"]);
        if (j["m_range"].contains("count")) s.m_count = j["m_range"]["count"].get<std::uint64_t>();
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    const Json j = read_json(path);
    try {
        return scenario_from_json(j, fs::path(path).parent_path().string());
    } catch (const Json::exception& e) {
        fail(ErrorKind::config, path + ": " + e.what());
    }
}

seq::WeightSequence load_weights(const Scenario& s) {
    if (s.weights.is_null()) fail(ErrorKind::usage, "no weights given (scenario 'weights' or --seq)");
    if (s.weights.is_object()) return seq::build(seq::generator_from_json(s.weights));
    if (s.weights.is_string()) return seq::load_sequence(resolve(s.base_dir, s.weights.get<std::string>()));
    fail(ErrorKind::config, "scenario: 'weights' must be a string or a generator object");
}

}  // namespace oscillab::erg
