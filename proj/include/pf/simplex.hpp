#ifndef PF_SIMPLEX_HPP
#define PF_SIMPLEX_HPP

#include <functional>
#include <vector>

namespace pf {

struct SimplexResult {
    std::vector<double> x;
    double fmin = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Nelder-Mead downhill simplex with the standard reflection/expansion/
// contraction/shrink coefficients.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& start, double step, int max_iter = 2000,
                          double ftol = 1e-12);

} // namespace pf

#endif
