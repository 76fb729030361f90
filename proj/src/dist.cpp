#include "contpath/dist.hpp"

#include <cmath>

#include "contpath/binom.hpp"
#include "contpath/quadrature.hpp"
#include "contpath/rng.hpp"
#include "contpath/specfn.hpp"
#include "contpath/util.hpp"

namespace contpath::dist {

namespace {

void check_x(double x) {
  if (!(x >= 0) || !std::isfinite(x)) throw domain_error("require x >= 0");
}

void check_p(double p) {
  if (!(p > 0) || !(p < 1)) throw domain_error("require 0 < p < 1");
}

}  // namespace

double binom_integral(double x, const SeriesConfig& cfg) {
  check_x(x);
  if (x == 0) return 0.0;
  return integrate_checked([&](double s) { return binom::cont_binom(x, s, cfg); }, 0.0,
                           x, cfg.rel_tol, 0.0);
}

double normalizer_half(double x) {
  check_x(x);
  return std::expm1(x) * std::pow(2.0, 1.0 - x);
}

double normalizer(double x, double p, const SeriesConfig& cfg) {
  check_x(x);
  check_p(p);
  if (p == 0.5) return normalizer_half(x);
  if (x == 0) return 0.0;
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  return integrate_checked(
      [&](double s) { return binom::cont_binom(x, s, cfg) * std::exp(s * lp + (x - s) * lq); },
      0.0, x, cfg.rel_tol, 0.0);
}

double normalizer_series(double x, double p, const SeriesConfig& cfg) {
  check_x(x);
  check_p(p);
  const double L = std::log(p / (1.0 - p));
  SeriesAccumulator acc(cfg);
  for (int m = 0; m < cfg.max_terms; ++m) {
    double block = 0.0;
    for (int k = 0; k <= m; ++k) {
      const int n = m - k;
      const double f = factorial_d(2 * n + k + 1);
      if (std::isinf(f)) continue;
      // C(n+k, k) with n+k = m fixed is C(m, k).
      block += binomial_d(m, k) * std::pow(L, k) *
               (std::pow(x, 2 * n + k + 1) / f +
                std::pow(x, 2 * n + k + 2) / ((2.0 * n + 2.0) * f));
    }
    if (acc.add(block)) return 2.0 * std::pow(1.0 - p, x) * acc.value();
  }
  throw convergence_error("normalizer_series: anti-diagonal blocks did not decay");
}

double normalizer_bessel(double x, double p, const SeriesConfig& cfg) {
  check_x(x);
  check_p(p);
  if (p == 0.5)
    throw domain_error("normalizer_bessel: p = 1/2 degenerates the expansion (L = 0)");
  if (x == 0) return 0.0;
  const double absL = std::fabs(std::log(p / (1.0 - p)));
  const double z = x * absL / 2.0;
  SeriesAccumulator acc(cfg);
  for (int n = 0; n < cfg.max_terms; ++n) {
    const double term = (x + 2.0 * n + 2.0) / factorial_d(n + 1) *
                        std::pow(x / absL, n + 0.5) * specfn::bessel_i_half(n, z, cfg);
    if (acc.add(term))
      return std::sqrt(M_PI) * std::pow(p * (1.0 - p), x / 2.0) * acc.value();
  }
  throw convergence_error("normalizer_bessel: series did not converge");
}

double density(double x, double s, const SeriesConfig& cfg) {
  if (!(x > 0) || !std::isfinite(x)) throw domain_error("density: require x > 0");
  if (!std::isfinite(s)) throw domain_error("density: require finite s");
  if (std::fabs(s) > x / 2.0) return 0.0;
  return binom::cont_binom(x, x / 2.0 + s, cfg) / (2.0 * std::expm1(x));
}

double moment_integral(double x, unsigned l, const SeriesConfig& cfg) {
  check_x(x);
  if (l == 0) return 2.0 * std::expm1(x);
  SeriesAccumulator acc(cfg);
  for (int n = 0; n < cfg.max_terms; ++n) {
    const double f = factorial_d(static_cast<int>(2 * n + l + 1));
    if (std::isinf(f)) break;
    // (n+l)_l = rising(n+1, l); (n+l)_{l-1} = rising(n+2, l-1).
    const double term =
        2.0 * rising_d(n + 1.0, static_cast<int>(l)) * std::pow(x, 2.0 * n + l + 1) / f +
        rising_d(n + 2.0, static_cast<int>(l) - 1) * std::pow(x, 2.0 * n + l + 2) / f;
    if (acc.add(term)) return acc.value();
  }
  throw convergence_error("moment_integral: series did not converge");
}

double moment_half(double x, unsigned l, const SeriesConfig& cfg) {
  if (!(x > 0)) throw domain_error("moment_half: require x > 0");
  return moment_integral(x, l, cfg) / (2.0 * std::expm1(x));
}

double moment_p(double x, double p, unsigned l, const SeriesConfig& cfg) {
  if (!(x > 0)) throw domain_error("moment_p: require x > 0");
  check_p(p);
  if (p == 0.5) return moment_half(x, l, cfg);
  const double L = std::log(p / (1.0 - p));
  SeriesAccumulator acc(cfg);
  bool decayed = false;
  for (int m = 0; m < cfg.max_terms && !decayed; ++m) {
    double block = 0.0;
    for (int k = 0; k <= m; ++k) {
      const int n = m - k;
      const int e = 2 * n + k + static_cast<int>(l);
      const double f = factorial_d(e + 1);
      if (std::isinf(f)) continue;
      block += std::pow(L, k) * binomial_d(n + k + static_cast<long>(l), n) *
               rising_d(k + 1.0, static_cast<int>(l)) *
               (std::pow(x, e + 1) / f + std::pow(x, e + 2) / ((2.0 * n + 2.0) * f));
    }
    decayed = acc.add(block);
  }
  if (!decayed)
    throw convergence_error("moment_p: anti-diagonal blocks did not decay");
  const double numerator = 2.0 * std::pow(1.0 - p, x) * acc.value();
  return numerator / normalizer(x, p, cfg);
}

double centered_moment(double x, unsigned order, const SeriesConfig& cfg) {
  if (!(x > 0)) throw domain_error("centered_moment: require x > 0");
  if (order % 2 == 1) return 0.0;  // d_x is even
  if (order == 0) return 1.0;
  double total = 0.0;
  for (unsigned l = 0; l <= order; ++l) {
    total += binomial_d(order, l) * std::pow(-x / 2.0, static_cast<double>(order - l)) *
             moment_integral(x, l, cfg);
  }
  return total / (2.0 * std::expm1(x));
}

std::vector<double> sample(double x, std::int64_t count, std::uint64_t seed,
                           const SeriesConfig& cfg) {
  if (!(x > 0)) throw domain_error("sample: require x > 0");
  if (count < 1) throw domain_error("sample: require count >= 1");
  const double peak = density(x, 0.0, cfg);
  Rng rng(seed);
  std::vector<double> draws;
  draws.reserve(static_cast<std::size_t>(count));
  while (static_cast<std::int64_t>(draws.size()) < count) {
    const double s = (rng.next_double() - 0.5) * x;
    const double envelope = rng.next_double() * peak;
    if (envelope <= density(x, s, cfg)) draws.push_back(s);
  }
  return draws;
}

std::vector<double> delta_limit_check(const std::function<double(double)>& f,
                                      const std::vector<double>& xs,
                                      const SeriesConfig& cfg) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!(x > 0)) throw domain_error("delta_limit_check: require x > 0");
    out.push_back(integrate_checked(
        [&](double s) { return f(s) * density(x, s, cfg); }, -x / 2.0, x / 2.0,
        cfg.rel_tol, 0.0));
  }
  return out;
}

}  // namespace contpath::dist
