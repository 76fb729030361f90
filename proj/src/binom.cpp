#include "contpath/binom.hpp"

#include <cmath>

#include "contpath/specfn.hpp"
#include "contpath/util.hpp"

namespace contpath::binom {

double cont_binom(double x, double s, const SeriesConfig& cfg) {
  if (!std::isfinite(x) || !std::isfinite(s) || x < 0 || s < 0 || s > x)
    throw domain_error("cont_binom: require 0 <= s <= x");
  if (s == 0 || s == x) return 2.0 + x;
  const double w = s * (x - s);
  SeriesAccumulator acc(cfg);
  double u = 1.0;  // w^n / (n!(n+1)!)
  for (int n = 0; n < cfg.max_terms; ++n) {
    if (acc.add((x + 2.0 * n + 2.0) * u)) return acc.value();
    u *= w / (static_cast<double>(n + 1) * (n + 2));
  }
  throw convergence_error("cont_binom: series did not converge");
}

double cont_binom_bessel(double x, double s, const SeriesConfig& cfg) {
  if (!std::isfinite(x) || !std::isfinite(s) || x < 0 || s < 0 || s > x)
    throw domain_error("cont_binom_bessel: require 0 <= s <= x");
  const double r = std::sqrt(s * (x - s));
  if (r == 0) return 2.0 + x;
  return 2.0 * specfn::bessel_i0(2.0 * r, cfg) +
         (x / r) * specfn::bessel_i1(2.0 * r, cfg);
}

double pde_residual(double x, double s, double h, const SeriesConfig& cfg) {
  if (!(h > 0)) throw domain_error("pde_residual: require h > 0");
  if (std::min(s, x - s) < 2.0 * h)
    throw domain_error("pde_residual: point too close to the boundary (margin 2h)");
  const double f = cont_binom(x, s, cfg);
  const double fxx =
      (cont_binom(x + h, s, cfg) - 2.0 * f + cont_binom(x - h, s, cfg)) / (h * h);
  const double fxs = (cont_binom(x + h, s + h, cfg) - cont_binom(x + h, s - h, cfg) -
                      cont_binom(x - h, s + h, cfg) + cont_binom(x - h, s - h, cfg)) /
                     (4.0 * h * h);
  return fxx + fxs - f;
}

mpz_class expansion_coeff(unsigned n, unsigned m) {
  const long twice = 2L * static_cast<long>(n);
  if (static_cast<long>(m) == twice)
    return 2 * specfn::falling_factorial(twice, n);
  if (static_cast<long>(m) == twice + 1)
    return specfn::falling_factorial(twice + 1, n);
  if (n >= 1 && static_cast<long>(m) == twice - 1)
    return specfn::falling_factorial(twice - 1, n);
  return 0;
}

double expansion_ts(double t, double s, int order) {
  if (!(t >= 0) || !(s >= 0)) throw domain_error("expansion_ts: require t, s >= 0");
  if (order < 0) throw domain_error("expansion_ts: require order >= 0");
  double total = 0.0;
  for (int n = 0; n <= order; ++n) {
    const double tn = std::pow(t, n) / factorial_d(n);
    if (tn == 0.0) break;
    double block = 0.0;
    for (long m = 2L * n - 1; m <= 2L * n + 1; ++m) {
      if (m < 0) continue;
      const mpz_class coeff = expansion_coeff(static_cast<unsigned>(n),
                                              static_cast<unsigned>(m));
      if (coeff == 0) continue;
      block += coeff.get_d() * std::pow(s, static_cast<double>(m)) /
               factorial_d(static_cast<int>(m));
    }
    const double term = tn * block;
    if (!std::isfinite(term)) break;
    total += term;
  }
  return total;
}

double midpoint_series(double s, const SeriesConfig& cfg) {
  if (!(s >= 0) || !std::isfinite(s)) throw domain_error("midpoint_series: require s >= 0");
  SeriesAccumulator acc(cfg);
  double term = 1.0;  // C(n, floor(n/2)) s^n / n! = s^n / (floor(n/2)! ceil(n/2)!)
  for (int n = 0; n < cfg.max_terms; ++n) {
    if (acc.add(term)) return 2.0 * acc.value();
    term *= s / static_cast<double>(n / 2 + 1);
  }
  throw convergence_error("midpoint_series: series did not converge");
}

DirectedPath interval_family_to_path(const IntervalFamily& family, double x) {
  if (!(x >= 0) || !std::isfinite(x))
    throw domain_error("interval_family_to_path: require x >= 0");
  const auto& parts = family.parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!(parts[i].a <= parts[i].b))
      throw domain_error("interval_family_to_path: interval with a > b");
    if (parts[i].a < 0 || parts[i].b > x)
      throw domain_error("interval_family_to_path: interval outside [0, x]");
    // Strict gaps: touching closed intervals would merge into one member.
    if (i > 0 && !(parts[i - 1].b < parts[i].a))
      throw domain_error("interval_family_to_path: intervals must be disjoint and ordered");
  }

  DirectedPath path;
  if (parts.empty()) {
    path.pattern = {2};
    path.times = {x};
  } else {
    if (parts.front().a > 0) {
      path.pattern.push_back(2);
      path.times.push_back(parts.front().a);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      path.pattern.push_back(1);
      path.times.push_back(parts[i].b - parts[i].a);
      if (i + 1 < parts.size()) {
        path.pattern.push_back(2);
        path.times.push_back(parts[i + 1].a - parts[i].b);
      }
    }
    if (parts.back().b < x) {
      path.pattern.push_back(2);
      path.times.push_back(x - parts.back().b);
    }
  }

  path.bends.reserve(path.pattern.size() + 1);
  std::array<double, 2> at{0.0, 0.0};
  path.bends.push_back(at);
  for (std::size_t i = 0; i < path.pattern.size(); ++i) {
    at[path.pattern[i] == 1 ? 0 : 1] += path.times[i];
    path.bends.push_back(at);
  }
  return path;
}

}  // namespace contpath::binom
