#include "pf/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace pf {

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& start, double step, int max_iter, double ftol) {
    const size_t n = start.size();
    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    for (size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);

    auto order = [&]() {
        std::vector<size_t> idx(n + 1);
        for (size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> np(n + 1);
        std::vector<double> nf(n + 1);
        for (size_t i = 0; i <= n; ++i) {
            np[i] = pts[idx[i]];
            nf[i] = fv[idx[i]];
        }
        pts = std::move(np);
        fv = std::move(nf);
    };

    SimplexResult res;
    int it = 0;
    for (; it < max_iter; ++it) {
        order();
        if (std::abs(fv[n] - fv[0]) <= ftol * (std::abs(fv[0]) + ftol)) {
            res.converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / double(n);

        auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (size_t j = 0; j < n; ++j) p[j] = centroid[j] + coef * (pts[n][j] - centroid[j]);
            return p;
        };

        std::vector<double> xr = blend(-1.0);
        double fr = f(xr);
        if (fr < fv[0]) {
            std::vector<double> xe = blend(-2.0);
            double fe = f(xe);
            if (fe < fr) {
                pts[n] = xe;
                fv[n] = fe;
            } else {
                pts[n] = xr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            pts[n] = xr;
            fv[n] = fr;
        } else {
            std::vector<double> xc = blend(fr < fv[n] ? -0.5 : 0.5);
            double fc = f(xc);
            if (fc < std::min(fr, fv[n])) {
                pts[n] = xc;
                fv[n] = fc;
            } else {
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j) pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
                    fv[i] = f(pts[i]);
                }
            }
        }
    }
    order();
    res.x = pts[0];
    res.fmin = fv[0];
    res.iterations = it;
    return res;
}

} // namespace pf
