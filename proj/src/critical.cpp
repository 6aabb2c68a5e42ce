#include "pf/critical.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "pf/roots.hpp"

namespace pf {

namespace {

int y_degree(const BiPoly<CD>& f) {
    int d = -1;
    for (const auto& [e, c] : f.terms()) d = std::max(d, e.b);
    return d;
}

int x_degree(const BiPoly<CD>& f) {
    int d = 0;
    for (const auto& [e, c] : f.terms()) d = std::max(d, e.a);
    return d;
}

// coefficient of y^j as a polynomial in x
UniPoly<CD> coeff_in_y(const BiPoly<CD>& f, int j) {
    std::vector<CD> v;
    for (const auto& [e, c] : f.terms()) {
        if (e.b != j) continue;
        if (e.a >= int(v.size())) v.resize(e.a + 1, CD(0.0, 0.0));
        v[size_t(e.a)] = c;
    }
    return UniPoly<CD>(std::move(v));
}

// f(x0, y) as a univariate polynomial in y
UniPoly<CD> eval_x(const BiPoly<CD>& f, CD x0) {
    int d = y_degree(f);
    std::vector<CD> v(size_t(d + 1), CD(0.0, 0.0));
    for (const auto& [e, c] : f.terms()) {
        CD t = c;
        for (int i = 0; i < e.a; ++i) t *= x0;
        v[size_t(e.b)] += t;
    }
    return UniPoly<CD>(std::move(v));
}

CD sylvester_det_at(const BiPoly<CD>& f, const BiPoly<CD>& g, int d1, int d2, CD x0) {
    const int n = d1 + d2;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    UniPoly<CD> fv = eval_x(f, x0), gv = eval_x(g, x0);
    for (int r = 0; r < d2; ++r)
        for (int j = 0; j <= d1; ++j) m(r, r + j) = fv.coeff(d1 - j);
    for (int r = 0; r < d1; ++r)
        for (int j = 0; j <= d2; ++j) m(d2 + r, r + j) = gv.coeff(d2 - j);
    return m.determinant();
}

UniPoly<CD> unipoly_pow(const UniPoly<CD>& p, int e) {
    UniPoly<CD> r = UniPoly<CD>::monomial(CD(1.0, 0.0), 0);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

// Res_y(f, g) as a polynomial in x, by evaluation at scaled roots of
// unity and an inverse DFT. Returns the zero polynomial when the
// resultant vanishes identically.
UniPoly<CD> resultant_in_x(const BiPoly<CD>& f, const BiPoly<CD>& g) {
    const int d1 = y_degree(f), d2 = y_degree(g);
    if (d1 == 0) return unipoly_pow(coeff_in_y(f, 0), d2);
    if (d2 == 0) return unipoly_pow(coeff_in_y(g, 0), d1);

    const int deg_bound = (d1 + d2) * std::max(x_degree(f), x_degree(g));
    const int N = deg_bound + 1;
    const double r = 1.37; // arbitrary off-unit radius, avoids symmetry traps
    std::vector<CD> vals(size_t(N));
    double vmax = 0.0;
    for (int j = 0; j < N; ++j) {
        double th = 2.0 * M_PI * j / N;
        vals[size_t(j)] = sylvester_det_at(f, g, d1, d2, r * CD(std::cos(th), std::sin(th)));
        vmax = std::max(vmax, std::abs(vals[size_t(j)]));
    }
    if (vmax == 0.0) return UniPoly<CD>();

    std::vector<CD> coeffs(size_t(N));
    double cmax = 0.0;
    for (int k = 0; k < N; ++k) {
        CD s(0.0, 0.0);
        for (int j = 0; j < N; ++j) {
            double th = -2.0 * M_PI * j * k / N;
            s += vals[size_t(j)] * CD(std::cos(th), std::sin(th));
        }
        s /= double(N) * std::pow(r, k);
        coeffs[size_t(k)] = s;
        cmax = std::max(cmax, std::abs(s));
    }
    for (auto& c : coeffs)
        if (std::abs(c) <= 1e-9 * cmax) c = CD(0.0, 0.0);
    return UniPoly<CD>(std::move(coeffs));
}

// damped 2D Newton toward dH = 0
std::pair<CD, CD> polish_point(const BiPoly<CD>& Hx, const BiPoly<CD>& Hy, CD x, CD y) {
    const BiPoly<CD> Hxx = Hx.dx(), Hxy = Hx.dy(), Hyx = Hy.dx(), Hyy = Hy.dy();
    for (int it = 0; it < 50; ++it) {
        CD fx = Hx.eval(x, y), fy = Hy.eval(x, y);
        CD a = Hxx.eval(x, y), b = Hxy.eval(x, y), c = Hyx.eval(x, y), d = Hyy.eval(x, y);
        CD det = a * d - b * c;
        if (std::abs(det) < 1e-14 * (std::abs(a * d) + std::abs(b * c) + 1e-300)) break;
        CD dx = (d * fx - b * fy) / det;
        CD dy = (-c * fx + a * fy) / det;
        x -= dx;
        y -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-15 * (1.0 + std::abs(x) + std::abs(y))) break;
    }
    return {x, y};
}

} // namespace

CriticalLocus critical_points(const BiPoly<CD>& H) {
    CriticalLocus out;
    auto dh = H.degree();
    if (!dh || *dh < 2) return out; // nothing to find, flagged incomplete

    const int n = *dh - 1;
    const BiPoly<CD> Hx = H.dx(), Hy = H.dy();
    out.regular_at_infinity = is_regular_at_infinity(H);

    if (Hx.is_zero() || Hy.is_zero()) {
        // a vanishing partial of a nonconstant H means lines of critical
        // points unless the other partial never vanishes
        const BiPoly<CD>& other = Hx.is_zero() ? Hy : Hx;
        if (other.is_zero() || y_degree(other) + x_degree(other) > 0)
            throw PreconditionError("critical_points: non-isolated critical locus");
        return out; // nonzero constant gradient: empty locus
    }

    UniPoly<CD> R = resultant_in_x(Hx, Hy);
    if (R.is_zero()) throw PreconditionError("critical_points: non-isolated critical locus (zero resultant)");
    if (R.degree() == 0) {
        out.complete = out.regular_at_infinity && n * n == 0;
        return out; // no finite critical points
    }

    const double gnorm =
        ScalarTraits<CD>::to_double(Hx.l1_norm()) + ScalarTraits<CD>::to_double(Hy.l1_norm());
    auto residual_ok = [&](CD x, CD y, double tol) {
        double loc = std::pow(1.0 + std::max(std::abs(x), std::abs(y)), n);
        double res = std::abs(Hx.eval(x, y)) + std::abs(Hy.eval(x, y));
        return res <= tol * gnorm * loc;
    };

    for (const auto& xc : complex_roots(R)) {
        // y candidates from whichever partial keeps y-degree at this x
        UniPoly<CD> gy = eval_x(Hy, xc.z);
        if (gy.degree() < 1) gy = eval_x(Hx, xc.z);
        std::vector<CD> ys;
        if (gy.degree() < 1) {
            if (residual_ok(xc.z, CD(0.0, 0.0), 1e-6)) ys.push_back(CD(0.0, 0.0));
        } else {
            for (const auto& yc : complex_roots(gy))
                if (residual_ok(xc.z, yc.z, 1e-4)) ys.push_back(yc.z);
        }
        if (ys.empty()) continue; // spurious eliminant root

        std::vector<std::pair<CD, CD>> pts;
        double ymax = 1.0;
        for (CD y0 : ys) {
            auto [px, py] = polish_point(Hx, Hy, xc.z, y0);
            if (!residual_ok(px, py, 1e-4)) continue;
            ymax = std::max({ymax, std::abs(px), std::abs(py)});
            bool dup = false;
            for (const auto& q : pts)
                if (std::abs(q.first - px) + std::abs(q.second - py) <= 1e-7 * ymax) dup = true;
            if (!dup) pts.push_back({px, py});
        }
        if (pts.empty()) continue;

        const int J = int(pts.size());
        const int share = xc.multiplicity / J;
        int extra = xc.multiplicity - share * J;
        for (const auto& [px, py] : pts) {
            int mult = share + (extra > 0 ? 1 : 0);
            if (extra > 0) --extra;
            if (mult == 0) mult = 1; // more y-branches than eliminant copies: count each once
            out.points.push_back({px, py, mult});
        }
    }

    for (const auto& cp : out.points) {
        out.total_multiplicity += cp.multiplicity;
        CD t = H.eval(cp.x, cp.y);
        for (int i = 0; i < cp.multiplicity; ++i) out.values.push_back(t);
    }
    out.complete = out.regular_at_infinity && out.total_multiplicity == n * n;
    return out;
}

SigmaChart normalize_sigma(const std::vector<CD>& values) {
    if (values.empty()) throw PreconditionError("normalize_sigma: empty critical value set");
    CD mean(0.0, 0.0);
    for (const auto& t : values) mean += t;
    mean /= double(values.size());
    double maxabs = 0.0, spread_scale = 0.0;
    for (const auto& t : values) {
        maxabs = std::max(maxabs, std::abs(t - mean));
        spread_scale = std::max(spread_scale, std::abs(t));
    }
    if (maxabs <= 1e-14 * std::max(1.0, spread_scale))
        throw PreconditionError("normalize_sigma: critical locus is a point");
    SigmaChart out;
    out.shift = mean;
    out.scale = maxabs;
    for (const auto& t : values) out.normalized.push_back((t - mean) / maxabs);
    return out;
}

bool single_value_check(const BiPoly<CD>& H, double rel_tol) {
    CriticalLocus locus = critical_points(H);
    if (locus.values.empty()) return true;
    double spread = 0.0, scale = 1.0;
    for (const auto& t : locus.values) scale = std::max(scale, std::abs(t));
    for (size_t i = 0; i < locus.values.size(); ++i)
        for (size_t j = i + 1; j < locus.values.size(); ++j)
            spread = std::max(spread, std::abs(locus.values[i] - locus.values[j]));
    return spread <= rel_tol * scale;
}

InverseSenseReport inverse_sense_check(const BiPoly<CD>& H, int n) {
    if (!is_quasimonic(H)) throw PreconditionError("inverse_sense_check: not quasimonic");
    const double hn = ScalarTraits<CD>::to_double((H - principal_part(H)).l1_norm());
    if (hn > 1.0 / (n * std::sqrt(2.0)) + 1e-12)
        throw PreconditionError("inverse_sense_check: ||H - Hhat|| exceeds 1/(n sqrt 2)");
    CriticalLocus locus = critical_points(H);
    InverseSenseReport rep;
    for (const auto& t : locus.values) rep.max_abs_value = std::max(rep.max_abs_value, std::abs(t));
    rep.within_disk = rep.max_abs_value <= 3.0 / n + 1e-9;
    return rep;
}

} // namespace pf
