#pragma once

#include <functional>

namespace fluctua {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // accumulated estimate, not a strict bound
  int intervals = 0;
};

// Adaptive Gauss-Kronrod 15(7) bisection on [a, b].
// Throws std::runtime_error when the interval budget is exhausted before the
// requested tolerance is met.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double tol, int max_intervals = 20000);

// integral over (0, inf) via x = u/(1-u)
QuadResult integrate_half_line(const std::function<double(double)>& f,
                               double tol, int max_intervals = 20000);

}  // namespace fluctua
