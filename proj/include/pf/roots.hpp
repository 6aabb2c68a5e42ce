#ifndef PF_ROOTS_HPP
#define PF_ROOTS_HPP

#include <utility>
#include <vector>

#include "pf/matrix.hpp"
#include "pf/unipoly.hpp"

namespace pf {

struct RootCluster {
    CD z;
    int multiplicity = 1;
};

// All complex roots, found as companion-matrix eigenvalues and polished
// by Newton steps. Numerically coincident copies are merged into
// multiplicity clusters: first at a tight radius, then by a wider pass
// that only fuses clusters showing multiple-root evidence (both p and p'
// tiny at the joint centroid). Exact trailing zeros are split off first,
// so pure monomial factors x^m come back exact.
std::vector<RootCluster> complex_roots(const UniPoly<CD>& p);

// roots as a flat list, each repeated per multiplicity
std::vector<CD> complex_roots_flat(const UniPoly<CD>& p);

// real roots sorted ascending (imaginary part below tol relative to root scale)
std::vector<double> real_roots(const UniPoly<CD>& p, double imag_tol = 1e-8);

std::vector<CD> mat_eigenvalues(const Mat<CD>& m);

} // namespace pf

#endif
