#include "pf/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace pf {

namespace {

// Newton steps on p; stalls near multiple roots are fine, the cluster
// pass below picks those up.
CD polish(const UniPoly<CD>& p, const UniPoly<CD>& dp, CD z) {
    for (int it = 0; it < 40; ++it) {
        CD f = p.eval(z);
        CD d = dp.eval(z);
        if (std::abs(d) < 1e-300) break;
        CD step = f / d;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        z -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    return z;
}

struct Cluster {
    CD sum{0.0, 0.0};
    int count = 0;
    CD centroid() const { return sum / double(count); }
};

std::vector<Cluster> cluster_points(const std::vector<CD>& zs, double radius) {
    std::vector<Cluster> cs;
    for (const CD& z : zs) {
        bool placed = false;
        for (auto& c : cs) {
            if (std::abs(z - c.centroid()) <= radius) {
                c.sum += z;
                ++c.count;
                placed = true;
                break;
            }
        }
        if (!placed) cs.push_back({z, 1});
    }
    return cs;
}

} // namespace

std::vector<RootCluster> complex_roots(const UniPoly<CD>& p) {
    if (p.degree() < 1) return {};

    // exact zero roots first
    std::vector<CD> c = p.coeffs();
    double cmax = 0.0;
    for (const CD& v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0.0) throw PreconditionError("complex_roots: zero polynomial");
    size_t lead = c.size() - 1;
    while (lead > 0 && std::abs(c[lead]) <= 1e-14 * cmax) --lead;
    c.resize(lead + 1);
    int zero_mult = 0;
    while (zero_mult < int(c.size()) - 1 && std::abs(c[size_t(zero_mult)]) <= 1e-14 * cmax) ++zero_mult;

    std::vector<RootCluster> out;
    if (zero_mult > 0) out.push_back({CD(0.0, 0.0), zero_mult});

    const int deg = int(c.size()) - 1 - zero_mult;
    if (deg <= 0) return out;

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    const CD lc = c.back();
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[size_t(zero_mult + i)] / lc;
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = CD(1.0, 0.0);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);

    UniPoly<CD> q(std::vector<CD>(c.begin() + zero_mult, c.end()));
    UniPoly<CD> dq = q.derivative();
    std::vector<CD> zs;
    double zmax = 0.0;
    for (int i = 0; i < deg; ++i) {
        CD z = polish(q, dq, es.eigenvalues()(i));
        zs.push_back(z);
        zmax = std::max(zmax, std::abs(z));
    }

    const double scale = 1.0 + zmax;
    auto fine = cluster_points(zs, 1e-8 * scale);

    // wider pass: merge clusters only when the joint centroid shows
    // multiple-root evidence (both |q| and |q'| tiny at that point)
    const double qscale = q.l1_norm() * std::pow(scale, deg);
    const double dscale = dq.l1_norm() * std::pow(scale, std::max(deg - 1, 0)) + 1e-300;
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < fine.size() && !merged; ++i)
            for (size_t j = i + 1; j < fine.size() && !merged; ++j) {
                CD ci = fine[i].centroid(), cj = fine[j].centroid();
                if (std::abs(ci - cj) > 2e-3 * scale) continue;
                CD joint = (fine[i].sum + fine[j].sum) / double(fine[i].count + fine[j].count);
                if (std::abs(q.eval(joint)) <= 1e-7 * qscale && std::abs(dq.eval(joint)) <= 1e-7 * dscale) {
                    fine[i].sum += fine[j].sum;
                    fine[i].count += fine[j].count;
                    fine.erase(fine.begin() + long(j));
                    merged = true;
                }
            }
    }

    for (const auto& cl : fine) out.push_back({cl.centroid(), cl.count});
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return out;
}

std::vector<CD> complex_roots_flat(const UniPoly<CD>& p) {
    std::vector<CD> out;
    for (const auto& rc : complex_roots(p))
        for (int i = 0; i < rc.multiplicity; ++i) out.push_back(rc.z);
    return out;
}

std::vector<double> real_roots(const UniPoly<CD>& p, double imag_tol) {
    const auto clusters = complex_roots(p);
    double scale = 1.0;
    for (const auto& rc : clusters) scale = std::max(scale, std::abs(rc.z));
    std::vector<double> out;
    for (const auto& rc : clusters)
        if (std::abs(rc.z.imag()) <= imag_tol * scale)
            for (int i = 0; i < rc.multiplicity; ++i) out.push_back(rc.z.real());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CD> mat_eigenvalues(const Mat<CD>& m) {
    const int n = m.rows();
    Eigen::MatrixXcd e(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e(i, j) = m(i, j);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(e, false);
    std::vector<CD> out(n);
    for (int i = 0; i < n; ++i) out[size_t(i)] = es.eigenvalues()(i);
    return out;
}

} // namespace pf
