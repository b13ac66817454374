#include "oscillab/erg/phase_reduction.hpp"

#include "oscillab/core/binomial.hpp"
#include "oscillab/core/error.hpp"

namespace oscillab::erg {

Reducer::Reducer(const dyn::AffineMap& t, const dyn::GroupPoint& x, std::vector<Character> chars, std::vector<IntPoly> qs)
    : t_(t), w_(dyn::build_w(t)), z_(w_.embed(t.group(), x)), chars_(std::move(chars)), qs_(std::move(qs)) {
    cert_ = dyn::entropy_certificate(w_.w);
    init();
}

Reducer::Reducer(const dyn::AffineMap& t, const dyn::EntropyCert& w_cert, const dyn::GroupPoint& x, std::vector<Character> chars,
                 std::vector<IntPoly> qs)
    : t_(t), w_(dyn::build_w(t)), cert_(w_cert), z_(w_.embed(t.group(), x)), chars_(std::move(chars)), qs_(std::move(qs)) {
    if (!dyn::verify_certificate(w_.w.linear, cert_)) fail(ErrorKind::precondition, "certificate does not certify W");
    init();
}

void Reducer::init() {
    if (t_.approximate) fail(ErrorKind::config, "phase reduction needs exact rational translations");
    if (chars_.size() != qs_.size()) fail(ErrorKind::dimension_mismatch, "need one character per orbit polynomial");
    for (auto& chi : chars_) chi = lift_first(t_.group(), chi);
    for (const auto& q : qs_)
        if (!validate_nat_poly(q)) fail(ErrorKind::invalid_polynomial, "orbit polynomial takes negative values on N", to_json(q).dump());
    orbit_ = std::make_unique<dyn::BinomialOrbit>(w_.w.linear, cert_, z_);
    pow2_.push_back(w_.w);
    for (int i = 1; i < 64; ++i) pow2_.push_back(dyn::compose(pow2_.back(), pow2_.back()));
}

PhaseReduction Reducer::reduce(std::uint64_t r) const {
    if (r >= cert_.nu) fail(ErrorKind::precondition, "residue r must be < nu = " + std::to_string(cert_.nu));
    const dyn::GroupSpec& g2 = w_.w.group();
    PhaseReduction out;
    out.r = r;
    out.nu = cert_.nu;
    out.kappa = cert_.kappa;
    for (std::size_t s = 0; s < chars_.size(); ++s) {
        const ShiftScale sc = poly_shift_scale(qs_[s], cert_.nu, r);
        ReductionFactor f{sc.r_prime, sc.q_prime, {}};
        const auto rp = static_cast<std::uint64_t>(sc.r_prime);
        for (int j = 0; j <= cert_.kappa; ++j) {
            f.t.push_back(char_phase(g2, chars_[s], orbit_->y(rp, j)));
            out.poly += binom_poly(sc.q_prime, static_cast<unsigned>(j)) * f.t.back().value();
        }
        out.factors.push_back(std::move(f));
    }
    return out;
}

UnitRational Reducer::direct_phase(std::uint64_t n) const {
    const dyn::GroupSpec& g2 = w_.w.group();
    UnitRational total;
    for (std::size_t s = 0; s < chars_.size(); ++s) {
        const BigInt e = qs_[s](BigInt(n));
        if (e > BigInt(std::numeric_limits<std::uint64_t>::max())) fail(ErrorKind::capacity, "orbit exponent exceeds 64 bits");
        auto k = static_cast<std::uint64_t>(e);
        dyn::GroupPoint p = z_;
        for (std::size_t i = 0; k != 0; ++i, k >>= 1)
            if (k & 1u) p = dyn::apply(pow2_[i], p);
        total += char_phase(g2, chars_[s], p);
    }
    return total;
}

PhaseReduction phase_reduction(const dyn::AffineMap& t, const dyn::EntropyCert& w_cert, const dyn::GroupPoint& x,
                               const std::vector<Character>& chars, const std::vector<IntPoly>& qs, std::uint64_t r) {
    return Reducer(t, w_cert, x, chars, qs).reduce(r);
}

Json to_json(const PhaseReduction& p) {
    Json factors = Json::array();
    for (const auto& f : p.factors) {
        Json t = Json::array();
        for (const auto& v : f.t) t.push_back(to_string(v));
        factors.push_back({{"r_prime", to_string(f.r_prime)}, {"q_prime", to_json(f.q_prime)}, {"t", t}});
    }
    return {{"r", p.r}, {"nu", p.nu}, {"kappa", p.kappa}, {"factors", factors}, {"poly", to_json(p.poly)}, {"degree", p.poly.degree()}};
}

Json to_json(const CrosscheckReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"r", x.r}, {"m", to_string(x.m)}, {"direct", to_string(x.direct)}, {"reduced", to_string(x.reduced)}});
    Json red = Json::array();
    for (const auto& p : r.reductions) red.push_back(to_json(p));
    return {{"nu", r.nu},         {"kappa", r.kappa},     {"m_first", to_string(r.m_first)}, {"m_count", r.m_count},
            {"checks", r.checks}, {"reductions", red}, {"violations", v}};
}

CrosscheckReport reduction_crosscheck(const dyn::AffineMap& t, const dyn::GroupPoint& x, const std::vector<Character>& chars,
                                      const std::vector<IntPoly>& qs, const BigInt& m_first, std::uint64_t m_count) {
    const Reducer reducer(t, x, chars, qs);
    const auto& cert = reducer.cert();
    if (m_first < cert.kappa) fail(ErrorKind::precondition, "m range must start at kappa = " + std::to_string(cert.kappa) + " or later");
    CrosscheckReport report;
    report.nu = cert.nu;
    report.kappa = cert.kappa;
    report.m_first = m_first;
    report.m_count = m_count;
    for (std::uint64_t r = 0; r < cert.nu; ++r) {
        PhaseReduction red = reducer.reduce(r);
        for (std::uint64_t i = 0; i < m_count; ++i) {
            const BigInt m = m_first + i;
            for (const auto& f : red.factors)
                if (f.q_prime(m) < cert.kappa) fail(ErrorKind::precondition, "q'(m) < kappa at m = " + to_string(m));
            const BigInt n = m * cert.nu + r;
            if (n > BigInt(std::numeric_limits<std::uint64_t>::max())) fail(ErrorKind::capacity, "m range too large");
            const UnitRational direct = reducer.direct_phase(static_cast<std::uint64_t>(n));
            const UnitRational reduced = red.eval(m);
            ++report.checks;
            if (!(direct == reduced)) report.violations.push_back({r, m, direct, reduced});
        }
        report.reductions.push_back(std::move(red));
    }
    return report;
}

}  // namespace oscillab::erg
