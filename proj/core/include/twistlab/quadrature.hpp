#pragma once
// Adaptive Gauss-Kronrod (G7/K15) quadrature with absolute-error control.

#include <functional>

namespace twistlab {

struct QuadResult {
  double value = 0.0;
  double abserr = 0.0;  // accumulated error estimate
};

// Integrate f on [a, b] to absolute tolerance tol. All nodes are interior,
// so integrable endpoint singularities (log-type) are handled by the
// adaptive subdivision; max_depth bounds the recursion.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10, int max_depth = 60);

// Convenience: integrate over [a, b] split into n equal panels first (for
// oscillatory integrands whose natural period is known).
QuadResult integrate_panels(const std::function<double(double)>& f, double a,
                            double b, int n, double tol = 1e-10);

}  // namespace twistlab
