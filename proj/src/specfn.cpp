#include "contpath/specfn.hpp"

#include <cmath>
#include <limits>

namespace contpath::specfn {

namespace {

constexpr double kEps = 2.220446049250313e-16;

}  // namespace

double bessel_i0(double z, const SeriesConfig& cfg) {
  if (!(z >= 0) || !std::isfinite(z)) throw domain_error("bessel_i0: require z >= 0");
  const double w = z * z / 4.0;
  SeriesAccumulator acc(cfg);
  double term = 1.0;  // w^k / (k!)^2
  for (int k = 0; k < cfg.max_terms; ++k) {
    if (acc.add(term)) return acc.value();
    term *= w / (static_cast<double>(k + 1) * (k + 1));
  }
  throw convergence_error("bessel_i0: series did not converge");
}

double bessel_i1(double z, const SeriesConfig& cfg) {
  if (!(z >= 0) || !std::isfinite(z)) throw domain_error("bessel_i1: require z >= 0");
  const double w = z * z / 4.0;
  SeriesAccumulator acc(cfg);
  double term = z / 2.0;  // (z/2) w^k / (k!(k+1)!)
  for (int k = 0; k < cfg.max_terms; ++k) {
    if (acc.add(term)) return acc.value();
    term *= w / (static_cast<double>(k + 1) * (k + 2));
  }
  throw convergence_error("bessel_i1: series did not converge");
}

double bessel_i_half_recurrence(int n, double z) {
  if (n < 0) throw domain_error("bessel_i_half: require n >= 0");
  if (!(z > 0) || !std::isfinite(z)) throw domain_error("bessel_i_half: require z > 0");
  const double c = std::sqrt(2.0 / (M_PI * z));
  double below = c * std::cosh(z);  // I_{-1/2}
  double cur = c * std::sinh(z);    // I_{+1/2}
  double v = 0.5;
  for (int i = 0; i < n; ++i) {
    const double next = below - (2.0 * v / z) * cur;
    below = cur;
    cur = next;
    v += 1.0;
  }
  return cur;
}

double bessel_i_half_series(int n, double z, const SeriesConfig& cfg) {
  if (n < 0) throw domain_error("bessel_i_half: require n >= 0");
  if (!(z > 0) || !std::isfinite(z)) throw domain_error("bessel_i_half: require z > 0");
  const double w = z * z / 4.0;
  SeriesAccumulator acc(cfg);
  // (z/2)^{n+1/2} / Gamma(n+3/2), then ratio w / ((k+1)(k+n+3/2)).
  double term = std::pow(z / 2.0, n + 0.5) / std::tgamma(n + 1.5);
  for (int k = 0; k < cfg.max_terms; ++k) {
    if (acc.add(term)) return acc.value();
    term *= w / (static_cast<double>(k + 1) * (k + n + 1.5));
  }
  throw convergence_error("bessel_i_half: series did not converge");
}

double bessel_i_half_recurrence_error(int n, double z, double result) {
  if (result <= 0 || !std::isfinite(result)) return std::numeric_limits<double>::infinity();
  // K_{n+1/2}(z)/K_{1/2}(z) = sum_{k=0}^{n} (n+k)! / (k!(n-k)!(2z)^k).
  double kratio = 1.0;
  double term = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= static_cast<double>(n + k + 1) * static_cast<double>(n - k) /
            (static_cast<double>(k + 1) * 2.0 * z);
    kratio += term;
    if (!std::isfinite(kratio)) return std::numeric_limits<double>::infinity();
  }
  const double i_half = std::sqrt(2.0 / (M_PI * z)) * std::sinh(z);
  // (n+1) safety factor: every step contributes fresh rounding that rides
  // the same amplification.
  return kEps * (n + 1) * i_half * kratio / result;
}

double bessel_i_half(int n, double z, const SeriesConfig& cfg) {
  if (n < 0) throw domain_error("bessel_i_half: require n >= 0");
  if (!(z > 0) || !std::isfinite(z)) throw domain_error("bessel_i_half: require z > 0");
  const double rec = bessel_i_half_recurrence(n, z);
  if (bessel_i_half_recurrence_error(n, z, rec) <= 1e-12) return rec;
  return bessel_i_half_series(n, z, cfg);
}

mpz_class falling_factorial(long a, unsigned n) {
  mpz_class r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a - static_cast<long>(i);
  return r;
}

}  // namespace contpath::specfn
