#ifndef PF_PERIODS_HPP
#define PF_PERIODS_HPP

#include <string>
#include <vector>

#include "pf/derive.hpp"
#include "pf/unipoly.hpp"

namespace pf {

// one compact real oval of { y^2/2 + p(x) = t }: the x-window [lo, hi]
struct OvalWindow {
    double lo = 0.0;
    double hi = 0.0;
};

// Compact real ovals of the level t, i.e. maximal intervals between
// consecutive real roots of p - t on which p < t. p must have real
// coefficients.
std::vector<OvalWindow> real_ovals(const UniPoly<CD>& p, double t);

// Periods I_i(t) = \oint x^(i-1) y dx over the chosen oval, i = 1..nbasis,
// by quadrature after the sine substitution that absorbs the square-root
// endpoint factors. Target relative accuracy 1e-10.
std::vector<double> hyperelliptic_periods(const UniPoly<CD>& p, double t, int oval, int nbasis);

// d/dt of the same periods: \oint x^(i-1) dx / y, an integrable endpoint
// singularity handled by the same substitution.
std::vector<double> period_derivatives(const UniPoly<CD>& p, double t, int oval, int nbasis);

double gelfand_leray_derivative(const UniPoly<CD>& p, double t, int oval, int i);

struct PeriodSample {
    double t = 0.0;
    std::vector<CD> I;
    std::vector<CD> Idot;
    int cycle_id = 0;
};

std::vector<PeriodSample> sample_periods(const UniPoly<CD>& p, const std::vector<double>& ts, int oval,
                                         int nbasis);

// max over samples of ||(t - A) Idot - B I||_1, scaled by
// (||A|| + ||B|| + |t|) * max(||I||_1, ||Idot||_1)
double ode_residual(const PFSystem<CD>& sys, const std::vector<PeriodSample>& samples);

// CSV rows t, skipped, Re/Im of each I_i then each Idot_i. Rows whose t
// has no compact oval (or sits on a critical value) are flagged and left
// empty. Returns the number of rows written (excluding the header).
int emit_period_csv(const UniPoly<CD>& p, double t_min, double t_max, int count, int oval, int nbasis,
                    const std::string& path);

} // namespace pf

#endif
