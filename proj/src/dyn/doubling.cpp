#include "oscillab/dyn/doubling.hpp"

#include "oscillab/core/binomial.hpp"
#include "oscillab/core/error.hpp"

namespace oscillab::dyn {

Doubling build_w(const AffineMap& t) {
    const GroupSpec& g = t.group();
    const GroupSpec g2 = doubled(g);
    const Eigen::Index d = g.d, k = g.k();
    IntMatrix torus = IntMatrix::Zero(2 * d, 2 * d);
    torus.topLeftCorner(d, d) = t.linear.torus;
    torus.topRightCorner(d, d) = IntMatrix::Identity(d, d);
    torus.bottomRightCorner(d, d) = IntMatrix::Identity(d, d);
    Matrix<BigRat> mixing = Matrix<BigRat>::Zero(2 * d, 2 * k);
    mixing.topLeftCorner(d, k) = t.linear.mixing;
    IntMatrix finite = IntMatrix::Zero(2 * k, 2 * k);
    finite.topLeftCorner(k, k) = t.linear.finite;
    finite.topRightCorner(k, k) = IntMatrix::Identity(k, k);
    finite.bottomRightCorner(k, k) = IntMatrix::Identity(k, k);
    Doubling out;
    out.w = {make_endomorphism(g2, std::move(torus), std::move(mixing), std::move(finite)), zero_point(g2), t.approximate};
    out.b = t.translation;
    return out;
}

Json to_json(const ConjugationReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"point", x.point}, {"n", x.n}});
    return {{"n_max", r.n_max}, {"points", r.points}, {"comparisons", r.comparisons}, {"violations", v}};
}

ConjugationReport conjugation_check(const AffineMap& t, const std::vector<GroupPoint>& points, std::uint64_t n_max) {
    const GroupSpec& g = t.group();
    const Doubling dbl = build_w(t);
    ConjugationReport report;
    report.n_max = n_max;
    report.points = points.size();
    for (std::size_t p = 0; p < points.size(); ++p) {
        check_point(g, points[p]);
        GroupPoint z = dbl.embed(g, points[p]);
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            if (n > 0) z = apply(dbl.w, z);
            ++report.comparisons;
            if (!(first_component(g, z) == iterate(t, points[p], n)) || !(second_component(g, z) == dbl.b))
                report.violations.push_back({p, n});
        }
    }
    return report;
}

BinomialOrbit::BinomialOrbit(const Endomorphism& w, const EntropyCert& cert, const GroupPoint& x) : group_(w.group), cert_(cert) {
    check_point(group_, x);
    std::vector<GroupPoint> nj{x};
    for (int j = 1; j <= cert.kappa; ++j) nj.push_back(apply(cert.nilpotent, nj.back()));
    table_.assign(cert.nu, {});
    for (std::uint64_t r = 0; r < cert.nu; ++r) {
        table_[r] = nj;
        for (auto& p : nj) p = apply(w, p);
    }
}

const GroupPoint& BinomialOrbit::y(std::uint64_t r, int j) const {
    if (r >= cert_.nu || j < 0 || j > cert_.kappa) fail(ErrorKind::precondition, "binomial orbit table index out of range");
    return table_[r][static_cast<std::size_t>(j)];
}

GroupPoint BinomialOrbit::at(const BigInt& m, std::uint64_t r) const {
    if (m < cert_.kappa) fail(ErrorKind::precondition, "binomial orbit needs m >= kappa = " + std::to_string(cert_.kappa));
    if (r >= cert_.nu) fail(ErrorKind::precondition, "binomial orbit needs 0 <= r < nu = " + std::to_string(cert_.nu));
    GroupPoint sum = zero_point(group_);
    for (int j = 0; j <= cert_.kappa; ++j)
        sum = add(group_, sum, scale(group_, binomial(m, static_cast<unsigned>(j)), table_[r][static_cast<std::size_t>(j)]));
    return sum;
}

GroupPoint binomial_orbit(const Endomorphism& w, const EntropyCert& cert, const GroupPoint& x, const BigInt& m, std::uint64_t r) {
    return BinomialOrbit(w, cert, x).at(m, r);
}

}  // namespace oscillab::dyn
