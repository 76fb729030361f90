#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cmath>
#include <vector>

#include "contpath/binom.hpp"
#include "contpath/util.hpp"
#include "support.hpp"

using contpath::convergence_error;
using contpath::domain_error;
using namespace contpath::binom;
using testsupport::rel_err;

TEST_CASE("boundary values are pinned exactly") {
  CHECK(cont_binom(1.0, 0.0) == 3.0);
  CHECK(cont_binom(1.0, 1.0) == 3.0);
  CHECK(cont_binom(7.25, 0.0) == 9.25);
  CHECK(cont_binom(0.0, 0.0) == 2.0);
  CHECK(cont_binom_bessel(4.5, 0.0) == 6.5);
  CHECK(cont_binom_bessel(4.5, 4.5) == 6.5);
}

TEST_CASE("interior values match high-precision references") {
  CHECK(rel_err(cont_binom(3.0, 2.0), 15.6892010568254618) < 1e-14);
  CHECK(rel_err(cont_binom(1.0, 0.5), 3.6624499634889867256) < 1e-14);
  CHECK(rel_err(cont_binom(5.0, 2.5), 103.15102793210994819) < 1e-14);
  CHECK(rel_err(cont_binom_bessel(3.0, 2.0), 15.6892010568254618) < 1e-13);
}

TEST_CASE("series and Bessel routes agree across the domain") {
  for (double x = 0.5; x <= 10.0; x += 0.5)
    for (int j = 1; j <= 9; ++j) {
      const double s = x * j / 10.0;
      CHECK(rel_err(cont_binom(x, s), cont_binom_bessel(x, s)) < 1e-12);
    }
}

TEST_CASE("symmetry s <-> x-s") {
  // Both sides go through w = s(x-s); they differ only in the rounding of
  // x-s itself, so the match is ulp-level.
  for (double x : {1.0, 2.5, 7.0})
    for (int j = 1; j <= 4; ++j) {
      const double s = x * j / 10.0;
      CHECK(rel_err(cont_binom(x, s), cont_binom(x, x - s)) < 1e-14);
    }
  // With dyadic s and x-s nothing re-rounds and the match is bitwise.
  CHECK(cont_binom(1.0, 0.25) == cont_binom(1.0, 0.75));
  CHECK(cont_binom(3.0, 0.5) == cont_binom(3.0, 2.5));
}

TEST_CASE("signed double-sum rewrite agrees where cancellation is mild") {
  const std::array<std::array<double, 2>, 6> pts = {{{0.5, 0.25},
                                                     {1.0, 0.5},
                                                     {1.0, 0.2},
                                                     {2.0, 1.0},
                                                     {2.0, 0.5},
                                                     {3.0, 1.5}}};
  for (const auto& [x, s] : pts) {
    CHECK(rel_err(testsupport::cont_binom_signed(x, s), cont_binom(x, s)) < 1e-8);
  }
}

TEST_CASE("shifted-diagonal series identity") {
  // {1+s <s>} = 3 + sum_{n>=1} (n^2 + 3n + 3) s^n / (n!(n+1)!).
  for (double s : {0.25, 0.5, 1.0, 2.0, 3.0, 5.0}) {
    double rhs = 3.0, p = 1.0;
    for (int n = 1; n <= 80; ++n) {
      p *= s;
      rhs += (n * n + 3.0 * n + 3.0) * p /
             (contpath::factorial_d(n) * contpath::factorial_d(n + 1));
    }
    CHECK(rel_err(cont_binom(1.0 + s, s), rhs) < 1e-12);
  }
}

TEST_CASE("midpoint series") {
  CHECK(rel_err(midpoint_series(1.0), 7.7404443139467926616) < 1e-14);
  for (double s : {0.5, 1.0, 2.5, 4.0})
    CHECK(rel_err(midpoint_series(s), cont_binom(2.0 * s, s)) < 1e-12);
  CHECK(midpoint_series(0.0) == 2.0);
  CHECK_THROWS_AS(midpoint_series(-1.0), domain_error);
}

TEST_CASE("each slice peaks at the midpoint") {
  for (double x : {1.0, 2.5, 4.0, 7.0}) {
    const double at_mid = cont_binom(x, x / 2.0);
    int best = 0;
    double best_v = -1.0;
    for (int j = 1; j <= 19; ++j) {
      const double v = cont_binom(x, x * j / 20.0);
      if (j != 10) CHECK(v < at_mid);
      if (v > best_v) {
        best_v = v;
        best = j;
      }
    }
    CHECK(best == 10);
  }
}

TEST_CASE("PDE residual shrinks at second order") {
  for (const auto& [x, s] : std::array<std::array<double, 2>, 10>{
           {{3.0, 1.0}, {2.0, 1.0}, {4.0, 1.5}, {1.0, 0.3}, {2.5, 0.7},
            {5.0, 2.2}, {6.0, 3.1}, {7.0, 2.9}, {8.0, 4.4}, {9.0, 1.6}}}) {
    const double r1 = pde_residual(x, s, 1e-2);
    const double r2 = pde_residual(x, s, 5e-3);
    CHECK(std::fabs(r1 / r2 - 4.0) < 0.5);
  }
  CHECK_THROWS_AS(pde_residual(1.0, 0.001, 1e-2), domain_error);  // margin < 2h
  CHECK_THROWS_AS(pde_residual(1.0, 0.5, 0.0), domain_error);
}

TEST_CASE("two-variable expansion coefficients") {
  CHECK(expansion_coeff(0, 0) == 2);
  CHECK(expansion_coeff(0, 1) == 1);
  CHECK(expansion_coeff(0, 2) == 0);
  CHECK(expansion_coeff(1, 1) == 1);   // (2n-1)_n at n = 1
  CHECK(expansion_coeff(1, 2) == 4);   // 2*(2n)_n at n = 1
  CHECK(expansion_coeff(1, 3) == 3);   // (2n+1)_n at n = 1
  CHECK(expansion_coeff(1, 0) == 0);
  CHECK(expansion_coeff(1, 4) == 0);
  CHECK(expansion_coeff(2, 3) == 6);   // (3)_2
  CHECK(expansion_coeff(2, 4) == 24);  // 2*(4)_2
  CHECK(expansion_coeff(2, 5) == 20);  // (5)_2
  CHECK(expansion_coeff(2, 2) == 0);
}

TEST_CASE("expansion evaluates back to the binomial function") {
  // x = (t+1)s: at t = 1, s = 1 the expansion should recover {2<1>}.
  CHECK(rel_err(expansion_ts(1.0, 1.0, 18), cont_binom(2.0, 1.0)) < 1e-10);
  CHECK(rel_err(expansion_ts(0.5, 0.8, 18), cont_binom(1.2, 0.8)) < 1e-10);
  CHECK(expansion_ts(0.0, 0.0, 0) == 2.0);
  CHECK_THROWS_AS(expansion_ts(-0.5, 1.0, 4), domain_error);
}

TEST_CASE("interval families map to directed paths") {
  IntervalFamily fam;
  fam.parts = {{0.0, 1.8}, {2.5, 3.5}, {4.2, 5.0}};
  const DirectedPath path = interval_family_to_path(fam, 5.0);
  CHECK(path.pattern == std::vector<int>{1, 2, 1, 2, 1});
  REQUIRE(path.times.size() == 5);
  CHECK(path.times[0] == doctest::Approx(1.8));
  CHECK(path.times[1] == doctest::Approx(0.7));
  CHECK(path.times[2] == doctest::Approx(1.0));
  CHECK(path.times[3] == doctest::Approx(0.7));
  CHECK(path.times[4] == doctest::Approx(0.8));
  REQUIRE(path.bends.size() == 6);
  CHECK(path.bends.front()[0] == 0.0);
  CHECK(path.bends.front()[1] == 0.0);
  // Final bend lands at (s, x - s) with s the total member length.
  CHECK(path.bends.back()[0] == doctest::Approx(fam.total_length()));
  CHECK(path.bends.back()[1] == doctest::Approx(5.0 - fam.total_length()));
}

TEST_CASE("interval family edge cases") {
  const DirectedPath empty = interval_family_to_path({}, 3.0);
  CHECK(empty.pattern == std::vector<int>{2});
  REQUIRE(empty.times.size() == 1);
  CHECK(empty.times[0] == 3.0);

  IntervalFamily full;
  full.parts = {{0.0, 3.0}};
  const DirectedPath horizontal = interval_family_to_path(full, 3.0);
  CHECK(horizontal.pattern == std::vector<int>{1});

  IntervalFamily gap_lead;
  gap_lead.parts = {{1.0, 2.0}};
  const DirectedPath mid = interval_family_to_path(gap_lead, 3.0);
  CHECK(mid.pattern == std::vector<int>{2, 1, 2});

  IntervalFamily touching;
  touching.parts = {{0.0, 1.0}, {1.0, 2.0}};
  CHECK_THROWS_AS(interval_family_to_path(touching, 3.0), domain_error);

  IntervalFamily backwards;
  backwards.parts = {{2.0, 1.0}};
  CHECK_THROWS_AS(interval_family_to_path(backwards, 3.0), domain_error);

  IntervalFamily outside;
  outside.parts = {{1.0, 4.0}};
  CHECK_THROWS_AS(interval_family_to_path(outside, 3.0), domain_error);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(cont_binom(1.0, 5.0), domain_error);
  CHECK_THROWS_AS(cont_binom(1.0, -0.5), domain_error);
  CHECK_THROWS_AS(cont_binom(-2.0, -1.0), domain_error);
  CHECK_THROWS_AS(cont_binom_bessel(2.0, 2.5), domain_error);
}
