#include "pf/periods.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "pf/quadrature.hpp"
#include "pf/roots.hpp"

namespace pf {

namespace {

void require_real(const UniPoly<CD>& p) {
    double scale = 1e-300;
    for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c));
    for (const auto& c : p.coeffs())
        if (std::abs(c.imag()) > 1e-12 * scale)
            throw PreconditionError("hyperelliptic periods: real potential expected");
}

bool near_critical(const UniPoly<CD>& p, double t) {
    for (const auto& rc : complex_roots(p.derivative())) {
        CD tv = p.eval(rc.z);
        if (std::abs(rc.z.imag()) > 1e-8 * (1.0 + std::abs(rc.z))) continue;
        if (std::abs(tv - t) <= 1e-10 * (1.0 + std::abs(tv) + std::abs(t))) return true;
    }
    return false;
}

// integrand machinery shared by periods and their derivatives: on the
// oval [lo, hi], with all roots r_j of p - t,
//   t - p(x) = lead * prod_{j != lo,hi} (x - r_j) * (hi - x)(x - lo)
// so the smooth positive factor q(x) below never loses the endpoint
// cancellation.
struct OvalGeometry {
    double mid, half;
    CD lead;
    std::vector<CD> other_roots;

    double q(double x) const {
        CD prod = lead;
        for (const CD& r : other_roots) prod *= (CD(x, 0.0) - r);
        return std::max(prod.real(), 0.0);
    }
    double x_of(double theta) const { return mid + half * std::sin(theta); }
};

OvalGeometry oval_geometry(const UniPoly<CD>& p, double t, const OvalWindow& w) {
    OvalGeometry g;
    g.mid = 0.5 * (w.lo + w.hi);
    g.half = 0.5 * (w.hi - w.lo);
    UniPoly<CD> pmt = p - UniPoly<CD>::monomial(CD(t, 0.0), 0);
    g.lead = pmt.leading();
    std::vector<CD> roots = complex_roots_flat(pmt);
    // drop one copy nearest each endpoint
    for (double endpoint : {w.lo, w.hi}) {
        size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < roots.size(); ++i) {
            double d = std::abs(roots[i] - CD(endpoint, 0.0));
            if (d < bd) {
                bd = d;
                best = i;
            }
        }
        roots.erase(roots.begin() + long(best));
    }
    g.other_roots = std::move(roots);
    return g;
}

} // namespace

std::vector<OvalWindow> real_ovals(const UniPoly<CD>& p, double t) {
    require_real(p);
    UniPoly<CD> pmt = p - UniPoly<CD>::monomial(CD(t, 0.0), 0);
    std::vector<double> rr = real_roots(pmt);
    std::vector<OvalWindow> out;
    for (size_t i = 0; i + 1 < rr.size(); ++i) {
        double lo = rr[i], hi = rr[i + 1];
        if (hi - lo <= 1e-10 * (1.0 + std::abs(lo) + std::abs(hi))) continue;
        double mid = 0.5 * (lo + hi);
        if (p.eval(CD(mid, 0.0)).real() < t) out.push_back({lo, hi});
    }
    return out;
}

static const OvalWindow& pick_oval(const std::vector<OvalWindow>& ovals, int oval) {
    if (oval < 0 || oval >= int(ovals.size()))
        throw PreconditionError("hyperelliptic periods: no compact oval with that index at this level");
    return ovals[size_t(oval)];
}

std::vector<double> hyperelliptic_periods(const UniPoly<CD>& p, double t, int oval, int nbasis) {
    require_real(p);
    if (p.degree() < 2) throw PreconditionError("hyperelliptic periods: deg p >= 2 required");
    if (near_critical(p, t)) throw PreconditionError("hyperelliptic periods: t is a critical value");
    const OvalWindow w = pick_oval(real_ovals(p, t), oval);
    const OvalGeometry g = oval_geometry(p, t, w);

    std::vector<double> out(size_t(nbasis));
    const double norm = 2.0 * std::sqrt(2.0) * g.half * g.half;
    for (int i = 1; i <= nbasis; ++i) {
        auto f = [&](double th) {
            double x = g.x_of(th);
            double c = std::cos(th);
            double xv = 1.0;
            for (int k = 1; k < i; ++k) xv *= x;
            return xv * c * c * std::sqrt(g.q(x));
        };
        out[size_t(i - 1)] = norm * integrate(f, -M_PI / 2.0, M_PI / 2.0, 1e-11);
    }
    return out;
}

std::vector<double> period_derivatives(const UniPoly<CD>& p, double t, int oval, int nbasis) {
    require_real(p);
    if (p.degree() < 2) throw PreconditionError("hyperelliptic periods: deg p >= 2 required");
    if (near_critical(p, t)) throw PreconditionError("hyperelliptic periods: t is a critical value");
    const OvalWindow w = pick_oval(real_ovals(p, t), oval);
    const OvalGeometry g = oval_geometry(p, t, w);

    std::vector<double> out(size_t(nbasis));
    const double norm = std::sqrt(2.0);
    for (int i = 1; i <= nbasis; ++i) {
        auto f = [&](double th) {
            double x = g.x_of(th);
            double xv = 1.0;
            for (int k = 1; k < i; ++k) xv *= x;
            return xv / std::sqrt(std::max(g.q(x), 1e-300));
        };
        out[size_t(i - 1)] = norm * integrate(f, -M_PI / 2.0, M_PI / 2.0, 1e-11);
    }
    return out;
}

double gelfand_leray_derivative(const UniPoly<CD>& p, double t, int oval, int i) {
    return period_derivatives(p, t, oval, i)[size_t(i - 1)];
}

std::vector<PeriodSample> sample_periods(const UniPoly<CD>& p, const std::vector<double>& ts, int oval,
                                         int nbasis) {
    std::vector<PeriodSample> out;
    for (double t : ts) {
        PeriodSample s;
        s.t = t;
        s.cycle_id = oval;
        for (double v : hyperelliptic_periods(p, t, oval, nbasis)) s.I.push_back(CD(v, 0.0));
        for (double v : period_derivatives(p, t, oval, nbasis)) s.Idot.push_back(CD(v, 0.0));
        out.push_back(std::move(s));
    }
    return out;
}

double ode_residual(const PFSystem<CD>& sys, const std::vector<PeriodSample>& samples) {
    const int nu = sys.nu;
    const double nA = ScalarTraits<CD>::to_double(col_norm(sys.A));
    const double nB = ScalarTraits<CD>::to_double(col_norm(sys.B));
    double worst = 0.0;
    for (const auto& s : samples) {
        if (int(s.I.size()) != nu || int(s.Idot.size()) != nu)
            throw PreconditionError("ode_residual: sample dimension does not match the system");
        double res = 0.0, scaleI = 0.0, scaleD = 0.0;
        for (int i = 0; i < nu; ++i) {
            CD lhs = s.t * s.Idot[size_t(i)];
            CD rhs(0.0, 0.0);
            for (int j = 0; j < nu; ++j) {
                lhs -= sys.A(i, j) * s.Idot[size_t(j)];
                rhs += sys.B(i, j) * s.I[size_t(j)];
            }
            res += std::abs(lhs - rhs);
            scaleI += std::abs(s.I[size_t(i)]);
            scaleD += std::abs(s.Idot[size_t(i)]);
        }
        double denom = (nA + nB + std::abs(s.t)) * std::max({scaleI, scaleD, 1e-300});
        worst = std::max(worst, res / denom);
    }
    return worst;
}

int emit_period_csv(const UniPoly<CD>& p, double t_min, double t_max, int count, int oval, int nbasis,
                    const std::string& path) {
    std::ofstream os(path);
    if (!os) throw InternalError("emit_period_csv: cannot open " + path);
    os.precision(17);
    os << "t,skipped";
    for (int i = 1; i <= nbasis; ++i) os << ",I" << i << "_re,I" << i << "_im";
    for (int i = 1; i <= nbasis; ++i) os << ",Idot" << i << "_re,Idot" << i << "_im";
    os << "\n";

    int rows = 0;
    if (count <= 0 || t_max < t_min) return rows;
    for (int k = 0; k < count; ++k) {
        double t = (count == 1) ? t_min : t_min + (t_max - t_min) * k / (count - 1);
        bool ok = !near_critical(p, t);
        std::vector<double> I, D;
        if (ok) {
            auto ovals = real_ovals(p, t);
            if (oval < 0 || oval >= int(ovals.size())) {
                ok = false;
            } else {
                I = hyperelliptic_periods(p, t, oval, nbasis);
                D = period_derivatives(p, t, oval, nbasis);
            }
        }
        os << t << ',' << (ok ? 0 : 1);
        for (int i = 0; i < nbasis; ++i) {
            if (ok)
                os << ',' << I[size_t(i)] << ",0";
            else
                os << ",,";
        }
        for (int i = 0; i < nbasis; ++i) {
            if (ok)
                os << ',' << D[size_t(i)] << ",0";
            else
                os << ",,";
        }
        os << "\n";
        ++rows;
    }
    return rows;
}

} // namespace pf
