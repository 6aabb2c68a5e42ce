#ifndef PF_CRITICAL_HPP
#define PF_CRITICAL_HPP

#include <vector>

#include "pf/bipoly.hpp"
#include "pf/normalization.hpp"

namespace pf {

struct CriticalPoint {
    CD x;
    CD y;
    int multiplicity = 1;
};

struct CriticalLocus {
    std::vector<CriticalPoint> points;
    std::vector<CD> values; // one entry per multiplicity, matching points order
    int total_multiplicity = 0;
    bool regular_at_infinity = false;
    bool complete = false; // total == n^2 (meaningful when regular)
};

// Solve H_x = H_y = 0 by eliminating y through the resultant, root-finding
// the eliminant in x, back-substituting and Newton-polishing. Multiplicity
// comes from root clustering (a heuristic; exact for monomial eliminants).
// Throws when the critical locus is non-isolated (resultant vanishes
// identically); when H is not regular at infinity the locus found is
// returned with regular_at_infinity = false.
CriticalLocus critical_points(const BiPoly<CD>& H);

inline CriticalLocus critical_points(const BiPoly<QQ>& H) { return critical_points(to_complex_poly(H)); }

struct SigmaChart {
    CD shift;     // subtracted mean
    double scale; // max modulus after centering
    std::vector<CD> normalized;
};

// Affine chart with sum zero and max modulus one; the one privileged up
// to rotation. Degenerate (all values equal) input is refused.
SigmaChart normalize_sigma(const std::vector<CD>& values);

// true iff all critical values coincide within a relative tolerance
bool single_value_check(const BiPoly<CD>& H, double rel_tol = 1e-6);
inline bool single_value_check(const BiPoly<QQ>& H, double rel_tol = 1e-6) {
    return single_value_check(to_complex_poly(H), rel_tol);
}

struct InverseSenseReport {
    bool within_disk = false; // all |t_j| <= 3/n
    double max_abs_value = 0.0;
};

// For quasimonic H with ||H - Hhat|| <= 1/(n*sqrt(2)) all critical values
// must sit in the disk of radius 3/n; reports the max modulus found.
InverseSenseReport inverse_sense_check(const BiPoly<CD>& H, int n);
inline InverseSenseReport inverse_sense_check(const BiPoly<QQ>& H, int n) {
    return inverse_sense_check(to_complex_poly(H), n);
}

} // namespace pf

#endif
