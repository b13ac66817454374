#include "oscillab/erg/character.hpp"

#include "oscillab/core/error.hpp"
#include "oscillab/core/turns.hpp"

namespace oscillab::erg {

void check_character(const dyn::GroupSpec& g, const Character& chi) {
    if (chi.torus.size() != static_cast<std::size_t>(g.d) || chi.finite.size() != g.moduli.size())
        fail(ErrorKind::dimension_mismatch, "character shape does not match the group");
    for (std::size_t i = 0; i < chi.finite.size(); ++i)
        if (chi.finite[i] >= g.moduli[i]) fail(ErrorKind::config, "character residue frequency not reduced mod its modulus");
}

bool is_trivial(const Character& chi) {
    for (const auto& a : chi.torus)
        if (a != 0) return false;
    for (auto c : chi.finite)
        if (c != 0) return false;
    return true;
}

UnitRational char_phase(const dyn::GroupSpec& g, const Character& chi, const dyn::GroupPoint& x) {
    check_character(g, chi);
    dyn::check_point(g, x);
    BigRat acc = 0;
    for (std::size_t i = 0; i < chi.torus.size(); ++i) acc += BigRat(chi.torus[i]) * x.torus[i].value();
    for (std::size_t i = 0; i < chi.finite.size(); ++i) acc += BigRat(BigInt(chi.finite[i]) * x.finite[i], BigInt(g.moduli[i]));
    return UnitRational(acc);
}

CharValue char_eval(const dyn::GroupSpec& g, const Character& chi, const dyn::GroupPoint& x) {
    const UnitRational phase = char_phase(g, chi, x);
    return {phase, cis_turns(phase.to_double())};
}

Character lift_first(const dyn::GroupSpec& g, const Character& chi) {
    check_character(g, chi);
    Character out = chi;
    out.torus.resize(2 * chi.torus.size(), BigInt(0));
    out.finite.resize(2 * chi.finite.size(), 0);
    return out;
}

Json to_json(const Character& chi) {
    Json t = Json::array();
    for (const auto& a : chi.torus) t.push_back(to_string(a));
    return {{"torus", t}, {"finite", chi.finite}};
}

Character character_from_json(const dyn::GroupSpec& g, const Json& j) {
    reject_unknown_keys(j, {"torus", "finite"}, "character");
    Character chi;
    if (j.contains("torus")) {
        if (!j["torus"].is_array()) fail(ErrorKind::config, "character: 'torus' must be an array");
        for (const auto& a : j["torus"]) chi.torus.push_back(integer_from_json(a));
    }
    if (j.contains("finite")) {
        if (!j["finite"].is_array()) fail(ErrorKind::config, "character: 'finite' must be an array");
        for (std::size_t i = 0; i < j["finite"].size(); ++i) {
            if (i >= g.moduli.size()) fail(ErrorKind::dimension_mismatch, "character: too many finite frequencies");
            chi.finite.push_back(static_cast<std::uint64_t>(mod_floor(integer_from_json(j["finite"][i]), BigInt(g.moduli[i]))));
        }
    }
    check_character(g, chi);
    return chi;
}

}  // namespace oscillab::erg
