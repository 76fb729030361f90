#include "contpath/verify.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>

#include "contpath/binom.hpp"
#include "contpath/catalan.hpp"
#include "contpath/dist.hpp"
#include "contpath/lattice.hpp"
#include "contpath/oracle.hpp"
#include "contpath/quadrature.hpp"

namespace contpath::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

double rel_diff(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

std::string strf(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

// Wraps the shared bookkeeping: timing, the normalized worst-ratio metric,
// and an optional runtime bound in seconds (0 = none).
struct Check {
  CriterionResult r;
  clock_type::time_point t0 = clock_type::now();
  double time_limit = 0.0;

  Check(int id, std::string name, double limit = 0.0) {
    r.id = id;
    r.name = std::move(name);
    time_limit = limit;
  }
  void ratio(double observed, double allowed) {
    r.worst = std::max(r.worst, allowed > 0.0 ? observed / allowed : kInf);
  }
  void exact(bool ok) {
    if (!ok) r.worst = kInf;
  }
  CriterionResult done(std::string detail) {
    r.seconds = seconds_since(t0);
    r.pass = r.worst <= 1.0 && (time_limit == 0.0 || r.seconds < time_limit);
    r.detail = std::move(detail);
    return r;
  }
};

CriterionResult boundary_symmetry() {
  Check c(1, "boundary values and reflection symmetry", 1.0);
  // Dyadic grid: s and x - s are both exactly representable, so the check
  // sees the evaluator's own symmetry rather than the rounding of x - s
  // (which alone shifts values of size ~1e4 by a few 1e-12).
  double raw = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double x = 3.0 * i / 16.0;  // up to 9.375
    c.exact(binom::cont_binom(x, 0.0) == 2.0 + x);
    c.exact(binom::cont_binom(x, x) == 2.0 + x);
    const double step = x / 64.0;
    for (int j = 1; j <= 50; ++j) {
      const double s = step * j;
      raw = std::max(raw, std::fabs(binom::cont_binom(x, s) - binom::cont_binom(x, x - s)));
    }
  }
  c.ratio(raw, 1e-12);
  return c.done(strf("endpoints exact; max |f(x,s)-f(x,x-s)| = %.2e over 2500 pairs "
                     "(allowed 1e-12)",
                     raw));
}

CriterionResult slice_integral() {
  Check c(2, "integral over the slice equals 2(e^x - 1)", 5.0);
  double raw = 0.0;
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double exact = 2.0 * std::expm1(x);
    raw = std::max(raw, std::fabs(dist::binom_integral(x) - exact) / exact);
  }
  c.ratio(raw, 1e-9);
  return c.done(strf("max relative error = %.2e at x in {0.5,1,2,5,10} (allowed 1e-9)", raw));
}

CriterionResult series_vs_bessel() {
  Check c(3, "series evaluator vs Bessel closed form", 2.0);
  double raw = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double x = 0.5 * i;
    for (int j = 0; j < 30; ++j) {
      const double s = 0.05 + (x - 0.10) * j / 29.0;
      raw = std::max(raw, rel_diff(binom::cont_binom(x, s), binom::cont_binom_bessel(x, s)));
    }
  }
  c.ratio(raw, 1e-10);
  return c.done(strf("max relative gap = %.2e over 600 grid points (allowed 1e-10)", raw));
}

CriterionResult pde_decay() {
  Check c(4, "PDE residual decays at second order");
  static const double pts[10][2] = {{3, 1},     {2, 1},     {4, 1.5},   {5, 2},
                                    {1.5, 0.5}, {2.5, 0.8}, {3.5, 2.0}, {4.5, 1.0},
                                    {6, 2.5},   {2.2, 1.4}};
  double raw = 0.0;
  for (const auto& p : pts) {
    const double r1 = binom::pde_residual(p[0], p[1], 1e-2);
    const double r2 = binom::pde_residual(p[0], p[1], 5e-3);
    raw = std::max(raw, std::fabs(r1 / r2 - 4.0));
  }
  c.ratio(raw, 0.5);
  return c.done(strf("max |ratio - 4| = %.2f at 10 interior points, h: 1e-2 -> 5e-3 "
                     "(allowed 0.5)",
                     raw));
}

// All alternating patterns feasible for integer budgets (s, u), each start.
std::vector<lattice::Pattern> feasible_patterns(long s, long u) {
  std::vector<lattice::Pattern> out;
  for (long a = 1; a <= s; ++a) {
    for (long b = a - 1; b <= a + 1; ++b) {
      if (b < 1 || b > u) continue;
      if (a == b) {
        out.push_back(oracle::alternating_pattern(a, b, 1));
        out.push_back(oracle::alternating_pattern(a, b, 2));
      } else {
        out.push_back(oracle::alternating_pattern(a, b, a > b ? 1 : 2));
      }
    }
  }
  return out;
}

CriterionResult lattice_point_anchor() {
  Check c(5, "interior lattice points sum to binomial coefficients", 30.0);
  int cases = 0;
  for (long x = 2; x <= 8; ++x) {
    for (long s = 1; s < x; ++s) {
      const long u = x - s;
      mpz_class total = 0;
      for (const auto& pat : feasible_patterns(s, u)) {
        total += lattice::interior_lattice_points(
            {lattice::grid_steps(), pat, {0, 0}, {s, u}, x, {}});
      }
      mpz_class expect;
      mpz_bin_uiui(expect.get_mpz_t(), x, s);
      c.exact(total == expect);
      ++cases;
    }
  }
  return c.done(strf("%d integer cases 0 < s < x <= 8, exact equality", cases));
}

double closed_double_series(double s, double u) {
  const double w = s * u;
  double a_term = 1.0, a_sum = 0.0;  // sum w^n / (n! n!)
  double b_term = 1.0, b_sum = 0.0;  // sum w^n / (n! (n+1)!)
  for (int n = 0; n < 400; ++n) {
    a_sum += a_term;
    b_sum += b_term;
    a_term *= w / ((n + 1.0) * (n + 1.0));
    b_term *= w / ((n + 1.0) * (n + 2.0));
    if (a_term <= 1e-18 * a_sum && b_term <= 1e-18 * b_sum) break;
  }
  return 2.0 * a_sum + (s + u) * b_sum;
}

CriterionResult volume_triple_check() {
  Check c(6, "pattern-sum volume vs double series vs series evaluator");
  static const double grid[] = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0};
  double raw = 0.0;
  for (double s : grid) {
    for (double u : grid) {
      const double a = oracle::gamma_total_volume(s, u);
      const double b = closed_double_series(s, u);
      const double f = binom::cont_binom(s + u, s);
      raw = std::max({raw, rel_diff(a, b), rel_diff(a, f), rel_diff(b, f)});
    }
  }
  c.ratio(raw, 1e-8);
  return c.done(strf("max pairwise relative gap = %.2e over 49 interior points "
                     "(allowed 1e-8)",
                     raw));
}

CriterionResult normalizer_routes() {
  Check c(7, "normalizer by quadrature vs double series vs Bessel series");
  double raw = 0.0;
  for (double p : {0.2, 0.3, 0.7}) {
    for (double x : {1.0, 2.0, 5.0}) {
      const double q = dist::normalizer(x, p);
      const double s = dist::normalizer_series(x, p);
      const double b = dist::normalizer_bessel(x, p);
      raw = std::max({raw, rel_diff(q, s), rel_diff(q, b), rel_diff(s, b)});
    }
  }
  c.ratio(raw, 1e-7);
  return c.done(strf("max pairwise relative gap = %.2e over 9 (p, x) pairs "
                     "(allowed 1e-7)",
                     raw));
}

CriterionResult moments_and_sampler(bool fast) {
  Check c(8, "moments by series vs quadrature; sampler statistics", 20.0);
  double raw_rel = 0.0;
  for (double x : {1.0, 2.0, 5.0, 10.0}) {
    for (unsigned l = 0; l <= 4; ++l) {
      const double series = dist::moment_half(x, l);
      const double quad = integrate_checked(
          [&](double t) { return std::pow(t + x / 2.0, l) * dist::density(x, t); },
          -x / 2.0, x / 2.0, 1e-11, 1e-15);
      raw_rel = std::max(raw_rel, rel_diff(series, quad));
    }
    for (unsigned order : {1u, 3u, 5u}) c.exact(dist::centered_moment(x, order) == 0.0);
  }
  c.ratio(raw_rel, 1e-8);

  const std::int64_t n = fast ? 100000 : 1000000;
  double worst_sigma = 0.0;
  for (double x : {1.0, 5.0}) {
    const auto draws = dist::sample(x, n, 97531);
    double mean = 0.0;
    for (double t : draws) mean += t;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double t : draws) var += (t - mean) * (t - mean);
    var /= static_cast<double>(n);
    const double m2 = dist::centered_moment(x, 2);
    const double m4 = dist::centered_moment(x, 4);
    const double z_mean = std::fabs(mean) / std::sqrt(m2 / static_cast<double>(n));
    const double z_var = std::fabs(var - m2) / std::sqrt((m4 - m2 * m2) / static_cast<double>(n));
    worst_sigma = std::max({worst_sigma, z_mean, z_var});
  }
  c.ratio(worst_sigma, 4.0);
  return c.done(strf("max moment gap = %.2e (allowed 1e-8); sampler worst z = %.2f "
                     "(allowed 4) at %lld draws",
                     raw_rel, worst_sigma, static_cast<long long>(n)));
}

CriterionResult component_volume_crosscheck(bool fast) {
  Check c(9, "component volumes: polynomial vs nested quadrature vs Monte Carlo");
  double raw_poly = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const double x = 0.5 * i;
    for (int j = 0; j <= 10; ++j) {
      const double y = x * j / 10.0;
      const double exact = (x - y) * (x + 3.0 * y) / 8.0;
      raw_poly = std::max(raw_poly, std::fabs(catalan::lambda_volume(1, x, y) - exact));
    }
  }
  c.ratio(raw_poly, 1e-12);

  const auto nested = [](int n, double x, double y) {
    return integrate_checked(
        [&](double b) {
          return integrate_checked(
              [&](double a) { return catalan::lambda_volume(n - 1, a + 2.0 * b, a); }, 0.0,
              (x + y) / 2.0 - b, 1e-10, 1e-13);
        },
        0.0, (x - y) / 2.0, 1e-10, 1e-13);
  };
  double raw_quad = 0.0;
  static const double pts[][2] = {{2, 0}, {3, 1}, {5, 2}, {4, 0}};
  for (const auto& p : pts) {
    for (int n : {2, 3}) {
      raw_quad = std::max(
          raw_quad, rel_diff(catalan::lambda_volume(n, p[0], p[1]), nested(n, p[0], p[1])));
    }
  }
  c.ratio(raw_quad, 1e-8);

  const std::int64_t samples = fast ? 100000 : 1000000;
  double worst_sigma = 0.0;
  for (int n : {2, 3}) {
    for (const auto& p : {std::pair{5.0, 2.0}, std::pair{3.0, 1.0}}) {
      oracle::PolytopeSpec spec;
      spec.kind = oracle::PolyKind::catalan_component;
      spec.n = n;
      spec.x = p.first;
      spec.y = p.second;
      const auto est = oracle::mc_volume(spec, samples, 777001);
      const double exact = catalan::lambda_volume(n, p.first, p.second);
      if (est.std_error > 0.0)
        worst_sigma = std::max(worst_sigma, std::fabs(est.value - exact) / est.std_error);
      else
        c.exact(est.value == exact);
    }
  }
  c.ratio(worst_sigma, 4.0);
  return c.done(strf("quadratic max |err| = %.2e; nested-quadrature max gap = %.2e; "
                     "Monte Carlo worst z = %.2f at %lld samples",
                     raw_poly, raw_quad, worst_sigma, static_cast<long long>(samples)));
}

CriterionResult coefficient_table_conditions() {
  Check c(10, "coefficient table: base row, vanishing, hand-derived first row");
  const catalan::CoeffTable table(24, 24);
  for (int m = 0; m <= table.mmax(); ++m) {
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      c.exact(table.coeff(0, k, l) == ((k == 0 && l == 0) ? 1 : 0));
      for (int n = 1; n <= table.nmax(); ++n) {
        const mpz_class& v = table.coeff(n, k, l);
        if (n > l) c.exact(v == 0);
        if (l == 0) c.exact(v == 0);
        if (v != 0) c.exact(k + l == 2 * n);  // homogeneity, used by the evaluator
      }
    }
  }
  for (int m = 0; m <= table.mmax(); ++m) {
    for (int k = 0; k <= m; ++k) {
      const int l = m - k;
      const bool hand = (k == 1 && l == 1) || (k == 0 && l == 2);
      c.exact(table.coeff(1, k, l) == (hand ? 1 : 0));
    }
  }
  return c.done("all exact integer conditions over n <= 24, k + l <= 24");
}

CriterionResult series_coefficient_consistency() {
  Check c(11, "one-variable series coefficients vs summed component volumes");
  const auto coeffs = catalan::catalan_series_coeffs(24);
  double worst = 0.0;
  for (double x : {0.25, 0.5, 1.0}) {
    double eval = 0.0, xm = 1.0;
    for (const auto& q : coeffs) {
      eval += q.get_d() * xm;
      xm *= x;
    }
    const auto direct = catalan::catalan_C(2.0 * x, 0.0, 20);
    const double allowed = 1e-9 + direct.tail_bound;
    const double ratio = std::fabs(eval - direct.value) / allowed;
    worst = std::max(worst, ratio);
  }
  c.ratio(worst, 1.0);
  return c.done(strf("max |series - direct| / (1e-9 + tail) = %.2e at x in "
                     "{0.25, 0.5, 1}",
                     worst));
}

CriterionResult integral_equation() {
  Check c(12, "integral equation self-consistency");
  double raw = 0.0;
  static const double pts[][2] = {{2, 0}, {3, 1}, {5, 2}};
  for (const auto& p : pts)
    raw = std::max(raw, catalan::integral_equation_residual(p[0], p[1]));
  c.ratio(raw, 1e-6);
  return c.done(strf("max residual = %.2e at (2,0), (3,1), (5,2) (allowed 1e-6)", raw));
}

CriterionResult dyck_and_peak_counts() {
  Check c(13, "Dyck and peak-refined counts match Catalan and Narayana numbers", 10.0);
  static const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    c.exact(lattice::dyck_count(n) == cat[n]);
    const auto rows = catalan::narayana_anchor(n);
    const auto peaks = lattice::dyck_counts_by_peaks(n);
    mpz_class sum = 0;
    for (int k = 1; k <= n; ++k) {
      const auto& row = rows[k - 1];
      c.exact(row.ups == k);
      c.exact(row.lattice_count == row.narayana);
      c.exact(row.lattice_count == peaks[k - 1]);
      sum += row.lattice_count;
    }
    c.exact(sum == cat[n]);
  }
  return c.done("exact integer equality for n <= 8");
}

CriterionResult point_mass_limit() {
  Check c(14, "densities concentrate: integrals of cos approach 1");
  const auto vals =
      dist::delta_limit_check([](double t) { return std::cos(t); }, {1.0, 0.5, 0.1, 0.02});
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) c.exact(vals[i] < vals[i + 1]);
  for (double v : vals) c.exact(v < 1.0);
  const double raw = std::fabs(1.0 - vals.back());
  c.ratio(raw, 1e-4);
  return c.done(strf("values %.6f, %.6f, %.6f, %.6f increasing; final gap %.2e "
                     "(allowed 1e-4)",
                     vals[0], vals[1], vals[2], vals[3], raw));
}

}  // namespace

std::vector<CriterionResult> run_all(bool fast) {
  std::vector<CriterionResult> out;
  out.push_back(boundary_symmetry());
  out.push_back(slice_integral());
  out.push_back(series_vs_bessel());
  out.push_back(pde_decay());
  out.push_back(lattice_point_anchor());
  out.push_back(volume_triple_check());
  out.push_back(normalizer_routes());
  out.push_back(moments_and_sampler(fast));
  out.push_back(component_volume_crosscheck(fast));
  out.push_back(coefficient_table_conditions());
  out.push_back(series_coefficient_consistency());
  out.push_back(integral_equation());
  out.push_back(dyck_and_peak_counts());
  out.push_back(point_mass_limit());
  return out;
}

}  // namespace contpath::verify
