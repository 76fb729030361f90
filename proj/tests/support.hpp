// Shared helpers for the test binaries: an independent fixed-order
// Gauss-Legendre rule (so quadrature cross-checks do not lean on the
// library's own adaptive engine), and the literal signed double-sum
// evaluator of the binomial function, kept test-only because its
// cancellations make it numerically inferior to the all-positive series.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "contpath/util.hpp"

namespace testsupport {

inline double rel_err(double got, double want) {
  const double scale = std::max(std::fabs(got), std::fabs(want));
  return scale == 0.0 ? 0.0 : std::fabs(got - want) / scale;
}

// Gauss-Legendre nodes/weights on [-1, 1]: Newton iteration on P_n with the
// three-term recurrence; exact for polynomials of degree <= 2n-1.
class GaussLegendre {
 public:
  explicit GaussLegendre(int n) : nodes_(n), weights_(n) {
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1.0);
        const double step = p1 / dp;
        t -= step;
        if (std::fabs(step) < 1e-15) break;
      }
      nodes_[i] = -t;
      nodes_[n - 1 - i] = t;
      const double w = 2.0 / ((1.0 - t * t) * dp * dp);
      weights_[i] = w;
      weights_[n - 1 - i] = w;
    }
  }

  double integrate(const std::function<double(double)>& f, double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      sum += weights_[i] * f(mid + half * nodes_[i]);
    return half * sum;
  }

 private:
  std::vector<double> nodes_, weights_;
};

// The signed three-part double sum for {x <s>}, index ranges taken
// literally:
//   2 * sum_{0 <= a <= b, a+b even} (-1)^{(b-a)/2}   C(b, (a+b)/2)   x^a s^b / (a! b!)
//     + sum_{0 <= a <= b-1, a+b odd} (-1)^{(b-a-1)/2} C(b, (a+b+1)/2) x^a s^b / (a! b!)
//     + sum_{0 <= a <= b+1, a+b odd} (-1)^{(b-a+1)/2} C(b, (b-a+1)/2) x^a s^b / (a! b!)
// Usable only where the cancellations stay mild (small x).
inline double cont_binom_signed(double x, double s, int bmax = 120) {
  using contpath::binomial_d;
  using contpath::factorial_d;
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (int b = 0; b <= bmax; ++b) {
    for (int a = 0; a <= b + 1; ++a) {
      const double base =
          std::pow(x, a) / factorial_d(a) * std::pow(s, b) / factorial_d(b);
      if ((a + b) % 2 == 0) {
        if (a <= b) {
          const double sign = (((b - a) / 2) % 2 == 0) ? 1.0 : -1.0;
          s1 += sign * binomial_d(b, (a + b) / 2) * base;
        }
      } else {
        if (a <= b - 1) {
          const double sign = (((b - a - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
          s2 += sign * binomial_d(b, (a + b + 1) / 2) * base;
        }
        const double sign = (((b - a + 1) / 2) % 2 == 0) ? 1.0 : -1.0;
        s3 += sign * binomial_d(b, (b - a + 1) / 2) * base;
      }
    }
  }
  return 2.0 * s1 + s2 + s3;
}

}  // namespace testsupport
