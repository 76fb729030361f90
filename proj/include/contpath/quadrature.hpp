#pragma once

#include <functional>

namespace contpath {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int evaluations = 0;
  bool converged = false;
};

// Globally adaptive Gauss-Kronrod 7-15 quadrature: the segment with the
// largest error estimate is bisected until sum(err) <= max(abs_tol,
// rel_tol * |value|) or the segment budget runs out.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0,
                     int max_segments = 2000);

// Same, but throws convergence_error instead of returning an unconverged
// result.
double integrate_checked(const std::function<double(double)>& f, double a, double b,
                         double rel_tol = 1e-10, double abs_tol = 0.0,
                         int max_segments = 2000);

}  // namespace contpath
