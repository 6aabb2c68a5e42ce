#include "pf/critgeom.hpp"

#include <algorithm>
#include <cmath>

#include "pf/error.hpp"
#include "pf/roots.hpp"
#include "pf/simplex.hpp"

namespace pf {

namespace {

void require_monic(const UniPoly<CD>& p) {
    if (p.degree() < 2 || std::abs(p.leading() - CD(1.0, 0.0)) > 1e-9)
        throw PreconditionError("monic polynomial of degree >= 2 expected");
}

} // namespace

UniCritReport uni_crit(const UniPoly<CD>& p) {
    require_monic(p);
    UniCritReport rep;
    for (const auto& rc : complex_roots(p.derivative())) {
        CD t = p.eval(rc.z);
        for (int i = 0; i < rc.multiplicity; ++i) {
            rep.crit_points.push_back(rc.z);
            rep.crit_values.push_back(t);
        }
    }
    rep.roots = complex_roots_flat(p);
    for (size_t i = 0; i < rep.roots.size(); ++i)
        for (size_t j = i + 1; j < rep.roots.size(); ++j)
            rep.root_diameter = std::max(rep.root_diameter, std::abs(rep.roots[i] - rep.roots[j]));
    double tmax = 0.0;
    for (const auto& t : rep.crit_values) tmax = std::max(tmax, std::abs(t));
    rep.sigma_in_unit_disk = tmax <= 1.0 + 1e-9;
    return rep;
}

RecenterResult recenter_min_norm(const UniPoly<CD>& p) {
    require_monic(p);
    const int np1 = p.degree();
    const UniPoly<CD> target = UniPoly<CD>::xpow(np1);
    auto objective = [&](const std::vector<double>& v) {
        return ScalarTraits<CD>::to_double((p.translated(CD(v[0], v[1])) - target).l1_norm());
    };

    // seeds: the root centroid plus every root (p(x + r) moves the root r
    // to the origin, so the best root seed already realizes the
    // root-shift cover bound)
    std::vector<CD> roots = complex_roots_flat(p);
    CD centroid(0.0, 0.0);
    for (const CD& r : roots) centroid += r;
    if (!roots.empty()) centroid /= double(roots.size());
    std::vector<CD> seeds{centroid, CD(0.0, 0.0)};
    for (const CD& r : roots) seeds.push_back(r);

    RecenterResult best;
    best.norm = std::numeric_limits<double>::infinity();
    int total_iters = 0;
    double scale = 1.0;
    for (const CD& r : roots) scale = std::max(scale, std::abs(r));
    for (const CD& a0 : seeds) {
        auto sr = nelder_mead(objective, {a0.real(), a0.imag()}, 0.25 * scale, 2000, 1e-13);
        total_iters += sr.iterations;
        if (sr.fmin < best.norm) {
            best.norm = sr.fmin;
            best.shift = CD(sr.x[0], sr.x[1]);
            best.converged = sr.converged;
        }
        if (total_iters > 10000) break;
    }
    best.iterations = total_iters;
    return best;
}

double bounded_interval(const UniPoly<CD>& p) {
    require_monic(p);
    double scale = 1e-300;
    for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c));
    for (const auto& c : p.coeffs())
        if (std::abs(c.imag()) > 1e-10 * scale)
            throw PreconditionError("bounded_interval: real polynomial expected");
    double zscale = 1.0;
    for (const auto& rc : complex_roots(p.derivative())) zscale = std::max(zscale, std::abs(rc.z));
    for (const auto& rc : complex_roots(p.derivative())) {
        if (std::abs(rc.z.imag()) > 1e-8 * zscale)
            throw PreconditionError("bounded_interval: all critical points must be real");
        CD t = p.eval(rc.z);
        if (std::abs(t.real()) > 1.0 + 1e-9 || std::abs(t.imag()) > 1e-8 * (1.0 + std::abs(t)))
            throw PreconditionError("bounded_interval: critical values must lie in [-1, 1]");
    }
    std::vector<double> rr = real_roots(p);
    if (rr.empty()) return 0.0;
    return rr.back() - rr.front();
}

KappaEstimate kappa_estimate(const BiPoly<CD>& H) {
    auto d = H.degree();
    if (!d || *d < 2) throw PreconditionError("kappa_estimate: degree >= 2 expected");
    const BiPoly<CD> Hhat = principal_part(H);
    auto objective = [&](const std::vector<double>& v) {
        return ScalarTraits<CD>::to_double(
            (H.translated(CD(v[0], v[1]), CD(v[2], v[3])) - Hhat).l1_norm());
    };

    const double hn = ScalarTraits<CD>::to_double((H - Hhat).l1_norm());
    const double hhn = ScalarTraits<CD>::to_double(Hhat.l1_norm());
    const double s = std::pow((hn + 1.0) / (hhn + 1.0), 1.0 / double(*d)) + 0.5;

    KappaEstimate best;
    best.kappa_upper = std::numeric_limits<double>::infinity();
    int iters = 0;
    for (int gx = -1; gx <= 1; ++gx)
        for (int gy = -1; gy <= 1; ++gy) {
            std::vector<double> start{s * gx, 0.0, s * gy, 0.0};
            auto sr = nelder_mead(objective, start, 0.5 * s, 1500, 1e-13);
            iters += sr.iterations;
            if (sr.fmin < best.kappa_upper) {
                best.kappa_upper = sr.fmin;
                best.alpha = CD(sr.x[0], sr.x[1]);
                best.beta = CD(sr.x[2], sr.x[3]);
            }
        }
    best.iterations = iters;
    return best;
}

} // namespace pf
