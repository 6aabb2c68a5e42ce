#ifndef PF_QUADRATURE_HPP
#define PF_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace pf {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

// Gauss-Legendre rule of the given order (cached).
const GaussRule& gauss_legendre(int order);

// Adaptive integration of a smooth integrand: escalating Gauss orders,
// then composite refinement. abs_floor guards the relative test for
// integrals that are legitimately ~0.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, double abs_floor = 1e-300);

} // namespace pf

#endif
