#ifndef PF_CRITGEOM_HPP
#define PF_CRITGEOM_HPP

#include <vector>

#include "pf/bipoly.hpp"
#include "pf/unipoly.hpp"

namespace pf {

struct UniCritReport {
    std::vector<CD> crit_points; // repeated per multiplicity
    std::vector<CD> crit_values;
    std::vector<CD> roots;
    double root_diameter = 0.0;
    bool sigma_in_unit_disk = false;
};

// Critical points/values and root diameter of a monic univariate
// polynomial. When the critical values sit in the closed unit disk, the
// root diameter is the quantity bounded by 4e.
UniCritReport uni_crit(const UniPoly<CD>& p);

struct RecenterResult {
    CD shift = 0.0;       // best a found for p(x + a)
    double norm = 0.0;    // ||p(x+a) - x^(n+1)||
    int iterations = 0;
    bool converged = true;
};

// min over complex a of ||p(x+a) - x^(n+1)||, by simplex descent seeded
// at the root centroid and at every root (so the result never exceeds the
// root-shift bound (1+4e)^(n+1) when the critical values are in the unit
// disk). An upper estimate of the infimum, not a certified minimum.
RecenterResult recenter_min_norm(const UniPoly<CD>& p);

// Real monic p with all critical points real and critical values in
// [-1, 1]: returns the span of its real roots (the Chebyshev-type bound
// says <= 4). Throws when the preconditions fail.
double bounded_interval(const UniPoly<CD>& p);

struct KappaEstimate {
    double kappa_upper = 0.0;
    CD alpha = 0.0; // best translation in x
    CD beta = 0.0;  // best translation in y
    int iterations = 0;
};

// Upper estimate of the effective nonhomogeneity
//   inf over translations of || H(x+alpha, y+beta) - Hhat ||,
// by multi-start simplex descent over C^2 (9 starts on a coefficient-
// scaled grid).
KappaEstimate kappa_estimate(const BiPoly<CD>& H);
inline KappaEstimate kappa_estimate(const BiPoly<QQ>& H) { return kappa_estimate(to_complex_poly(H)); }

} // namespace pf

#endif
