#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "contpath/binom.hpp"
#include "contpath/oracle.hpp"
#include "support.hpp"

using contpath::domain_error;
using namespace contpath::oracle;
using testsupport::rel_err;

TEST_CASE("alternating pattern construction") {
  CHECK(alternating_pattern(2, 2, 1) == contpath::lattice::Pattern{1, 2, 1, 2});
  CHECK(alternating_pattern(2, 2, 2) == contpath::lattice::Pattern{2, 1, 2, 1});
  CHECK(alternating_pattern(2, 1, 1) == contpath::lattice::Pattern{1, 2, 1});
  CHECK(alternating_pattern(1, 2, 2) == contpath::lattice::Pattern{2, 1, 2});
  CHECK(alternating_pattern(0, 1, 2) == contpath::lattice::Pattern{2});
  CHECK(alternating_pattern(0, 0, 1) == contpath::lattice::Pattern{});
  CHECK_THROWS_AS(alternating_pattern(3, 1, 1), domain_error);
  CHECK_THROWS_AS(alternating_pattern(1, 2, 1), domain_error);  // shorter side starting
  CHECK_THROWS_AS(alternating_pattern(2, 2, 3), domain_error);
}

TEST_CASE("component volumes have the closed product form") {
  // a runs of 1, b runs of 2 -> s^{a-1}/(a-1)! * u^{b-1}/(b-1)!.
  CHECK(gamma_component_volume({1, 2}, 3.0, 2.0) == 1.0);
  CHECK(gamma_component_volume({1, 2, 1}, 3.0, 2.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(gamma_component_volume({1, 2, 1, 2}, 3.0, 2.0) == doctest::Approx(6.0));
  CHECK(gamma_component_volume({1, 2, 1, 2, 1}, 3.0, 2.0) == doctest::Approx(9.0));
  // Zero budget in a direction the pattern uses -> empty component.
  CHECK(gamma_component_volume({1, 2}, 3.0, 0.0) == 0.0);
  // Zero budget in a direction the pattern never uses -> 0-dimensional factor 1.
  CHECK(gamma_component_volume({1}, 3.0, 0.0) == 1.0);
  CHECK(gamma_component_volume({2}, 0.0, 2.0) == 1.0);
  // Leftover budget in an unused direction is infeasible.
  CHECK(gamma_component_volume({1}, 3.0, 2.0) == 0.0);
  // Empty pattern only fits the zero budgets.
  CHECK(gamma_component_volume({}, 0.0, 0.0) == 1.0);
  CHECK(gamma_component_volume({}, 1.0, 0.0) == 0.0);

  // Swapping the two run labels (and their budgets) while reversing the
  // pattern relabels the same polytope, so the volume is unchanged.
  const std::vector<contpath::lattice::Pattern> pats = {
      {1}, {1, 2}, {2, 1}, {1, 2, 1}, {2, 1, 2}, {1, 2, 1, 2}, {1, 2, 1, 2, 1}};
  for (const auto& c : pats) {
    contpath::lattice::Pattern swapped(c.rbegin(), c.rend());
    for (int& e : swapped) e = 3 - e;
    CHECK(gamma_component_volume(c, 1.7, 2.3) ==
          gamma_component_volume(swapped, 2.3, 1.7));
  }
}

TEST_CASE("pattern sum reproduces the series evaluator in the interior") {
  for (double s : {0.25, 0.5, 1.0, 2.0, 3.5})
    for (double u : {0.25, 1.0, 2.0, 4.0}) {
      const double total = gamma_total_volume(s, u);
      const double series = contpath::binom::cont_binom(s + u, s);
      CHECK(rel_err(total, series) < 1e-10);
    }
}

TEST_CASE("pattern sum on the axes keeps only surviving patterns") {
  // At u = 0 only the single-run horizontal pattern (volume 1) survives;
  // the series limit 2+x also counts patterns that degenerate there.
  CHECK(gamma_total_volume(0.0, 0.0) == 1.0);
  CHECK(gamma_total_volume(3.0, 0.0) == 1.0);
  CHECK(gamma_total_volume(0.0, 2.5) == 1.0);
  CHECK_THROWS_AS(gamma_total_volume(-1.0, 2.0), domain_error);
}

TEST_CASE("exact volumes") {
  PolytopeSpec poly;
  poly.kind = PolyKind::binomial_component;
  poly.c = {1, 2, 1};
  poly.s = 2.0;
  poly.u = 1.0;
  VolumeEstimate est = exact_volume(poly);
  CHECK(est.exact);
  CHECK(est.std_error == 0.0);
  CHECK(est.value == doctest::Approx(2.0).epsilon(1e-14));

  PolytopeSpec cat0;
  cat0.kind = PolyKind::catalan_component;
  cat0.n = 0;
  cat0.x = 4.0;
  cat0.y = 1.0;
  CHECK(exact_volume(cat0).value == 1.0);
  CHECK(exact_volume(cat0).exact);

  PolytopeSpec cat2 = cat0;
  cat2.n = 2;
  CHECK_THROWS_AS(exact_volume(cat2), domain_error);

  PolytopeSpec bad = poly;
  bad.c = {1, 1, 2};
  CHECK_THROWS_AS(exact_volume(bad), domain_error);
  bad = poly;
  bad.s = -1.0;
  CHECK_THROWS_AS(exact_volume(bad), domain_error);
}

TEST_CASE("Monte Carlo volumes agree with closed forms within 4 sigma") {
  // Patterns with at most two runs per direction fill their coordinate box
  // (free run times never exceed the budget), so use a five-run pattern to
  // exercise actual rejection.
  PolytopeSpec poly;
  poly.kind = PolyKind::binomial_component;
  poly.c = {1, 2, 1, 2, 1};
  poly.s = 3.0;
  poly.u = 2.0;
  VolumeEstimate mc = mc_volume(poly, 200000, 4242);
  CHECK_FALSE(mc.exact);
  CHECK(mc.std_error > 0.0);
  CHECK(std::fabs(mc.value - 9.0) < 4.0 * mc.std_error);

  PolytopeSpec lam1;
  lam1.kind = PolyKind::catalan_component;
  lam1.n = 1;
  lam1.x = 2.0;
  lam1.y = 0.0;
  mc = mc_volume(lam1, 200000, 91);
  CHECK(std::fabs(mc.value - 0.5) < 4.0 * mc.std_error);

  lam1.x = 3.0;
  lam1.y = 1.0;
  mc = mc_volume(lam1, 200000, 92);
  CHECK(std::fabs(mc.value - 1.5) < 4.0 * mc.std_error);

  // Zero-dimensional polytopes skip sampling entirely.
  PolytopeSpec pt;
  pt.kind = PolyKind::binomial_component;
  pt.c = {1};
  pt.s = 5.0;
  pt.u = 0.0;
  mc = mc_volume(pt, 1000, 7);
  CHECK(mc.exact);
  CHECK(mc.value == 1.0);
  CHECK(mc.samples == 0);
}

TEST_CASE("Monte Carlo estimates are deterministic per seed and sharded") {
  PolytopeSpec poly;
  poly.kind = PolyKind::binomial_component;
  poly.c = {1, 2, 1, 2, 1};
  poly.s = 2.0;
  poly.u = 1.0;
  const VolumeEstimate a = mc_volume(poly, 300000, 555);
  const VolumeEstimate b = mc_volume(poly, 300000, 555);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  const VolumeEstimate c = mc_volume(poly, 300000, 556);
  CHECK(a.value != c.value);  // different stream
  CHECK_THROWS_AS(mc_volume(poly, 0, 1), domain_error);
}
