#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "contpath/lattice.hpp"
#include "contpath/series.hpp"

using contpath::domain_error;
using namespace contpath::lattice;

TEST_CASE("pattern_of collapses consecutive repeats") {
  CHECK(pattern_of({2, 2, 1, 3, 3, 3, 1, 1}) == Pattern{2, 1, 3, 1});
  CHECK(pattern_of({}) == Pattern{});
  CHECK(pattern_of({5}) == Pattern{5});
  CHECK(pattern_of({1, 1, 1, 1}) == Pattern{1});
}

TEST_CASE("pattern validity") {
  const StepSet grid = grid_steps();
  CHECK(pattern_valid(grid, {1, 2, 1}));
  CHECK(pattern_valid(grid, {}));
  CHECK_FALSE(pattern_valid(grid, {1, 1, 2}));  // adjacent repeat
  CHECK_FALSE(pattern_valid(grid, {1, 3}));     // label out of range
  CHECK_FALSE(pattern_valid(grid, {0, 1}));
}

TEST_CASE("grid path counts are binomial coefficients") {
  const StepSet grid = grid_steps();
  CHECK(count_paths(grid, {0, 0}, {2, 2}, 4) == 6);
  CHECK(count_paths(grid, {0, 0}, {3, 5}, 8) == 56);
  CHECK(count_paths(grid, {1, 1}, {4, 3}, 5) == 10);  // translation invariance
  CHECK(count_paths(grid, {0, 0}, {2, 2}, 3) == 0);   // wrong time budget
  CHECK(count_paths(grid, {0, 0}, {0, 0}, 0) == 1);   // empty path
  CHECK_THROWS_AS(count_paths(grid, {0, 0}, {1, 0}, -1), domain_error);
}

TEST_CASE("per-pattern counts are compositions with fixed direction totals") {
  const StepSet grid = grid_steps();
  // Pattern (1,2): both run times are forced, so exactly one path.
  CHECK(count_paths_by_pattern(grid, {0, 0}, {3, 2}, 5, {1, 2}) == 1);
  // Pattern (1,2,1): t1 + t3 = 3 with both positive -> 2 ways.
  CHECK(count_paths_by_pattern(grid, {0, 0}, {3, 2}, 5, {1, 2, 1}) == 2);
  // Infeasible: pattern needs vertical time but the endpoint has none.
  CHECK(count_paths_by_pattern(grid, {0, 0}, {3, 0}, 3, {1, 2}) == 0);
  // Summing over all patterns recovers the plain count.
  mpz_class total = 0;
  const long s = 3, u = 2;
  for (int a = 1; a <= s; ++a)
    for (int b = a - 1; b <= a + 1; ++b) {
      if (b < 1 || b > u) continue;
      Pattern c;
      if (a >= b) {
        for (int i = 0; i < a + b; ++i) c.push_back(i % 2 == 0 ? 1 : 2);
      } else {
        for (int i = 0; i < a + b; ++i) c.push_back(i % 2 == 0 ? 2 : 1);
      }
      total += count_paths_by_pattern(grid, {0, 0}, {s, u}, s + u, c);
      if (a == b) {  // both starts realizable
        Pattern d;
        for (int i = 0; i < a + b; ++i) d.push_back(i % 2 == 0 ? 2 : 1);
        total += count_paths_by_pattern(grid, {0, 0}, {s, u}, s + u, d);
      }
    }
  CHECK(total == 10);  // C(5,3)
  CHECK_THROWS_AS(count_paths_by_pattern(grid, {0, 0}, {1, 1}, 2, {1, 1}), domain_error);

  // The same decomposition over every split of up to ten steps; patterns
  // that cannot realize the endpoint contribute zero, so we may sum over all
  // alternating label sequences blindly.
  for (int l = 1; l <= 10; ++l)
    for (long p = 0; p <= l; ++p) {
      const long q = l - p;
      mpz_class sum = 0;
      for (int m = 1; m <= l; ++m)
        for (int first : {1, 2}) {
          Pattern c(m);
          for (int i = 0; i < m; ++i) c[i] = (i % 2 == 0) ? first : 3 - first;
          sum += count_paths_by_pattern(grid, {0, 0}, {p, q}, l, c);
        }
      CHECK(sum == count_paths(grid, {0, 0}, {p, q}, l));
    }
}

TEST_CASE("interior lattice points of the component polytope count its paths") {
  const StepSet grid = grid_steps();
  const std::vector<Pattern> pats = {{1, 2}, {2, 1}, {1, 2, 1}, {2, 1, 2}, {1, 2, 1, 2}};
  for (const Pattern& c : pats) {
    for (long s = 1; s <= 4; ++s)
      for (long u = 1; u <= 4; ++u) {
        PolytopeSpec poly{grid, c, {0, 0}, {s, u}, s + u, {}};
        CHECK(interior_lattice_points(poly) ==
              count_paths_by_pattern(grid, {0, 0}, {s, u}, s + u, c));
      }
  }
}

TEST_CASE("region restriction: Dyck counts") {
  const mpz_class want[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 0; n <= 8; ++n) CHECK(dyck_count(n) == want[n]);
  // Same thing through the generic restricted DP.
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_paths_restricted(updown_steps(), {0, 0}, {2 * n, 0}, 2 * n,
                                 upper_half_plane()) == want[n]);
  }
  // The per-pattern decomposition also survives the region restriction.
  for (int n = 1; n <= 6; ++n) {
    mpz_class sum = 0;
    for (int m = 1; m <= 2 * n; ++m)
      for (int first : {1, 2}) {
        Pattern c(m);
        for (int i = 0; i < m; ++i) c[i] = (i % 2 == 0) ? first : 3 - first;
        sum += count_paths_by_pattern(updown_steps(), {0, 0}, {2 * n, 0},
                                      2 * n, c, upper_half_plane());
      }
    CHECK(sum == want[n]);
  }
  // Unrestricted up/down paths returning to the axis: central binomials.
  CHECK(count_paths(updown_steps(), {0, 0}, {6, 0}, 6) == 20);
  CHECK_THROWS_AS(dyck_count(-1), domain_error);
  CHECK_THROWS_AS(
      count_paths_restricted(updown_steps(), {0, -1}, {2, 0}, 3, upper_half_plane()),
      domain_error);
}

TEST_CASE("region membership") {
  const HalfspaceRegion upper = upper_half_plane();
  CHECK(region_contains(upper, {5, 0}));
  CHECK(region_contains(upper, {-3, 2}));
  CHECK_FALSE(region_contains(upper, {0, -1}));
  CHECK(region_contains({}, {7, -9}));  // empty region list = whole space
}

TEST_CASE("peak refinement matches the Narayana numbers") {
  const std::vector<mpz_class> peaks3 = dyck_counts_by_peaks(3);
  REQUIRE(peaks3.size() == 3);
  CHECK(peaks3[0] == 1);
  CHECK(peaks3[1] == 3);
  CHECK(peaks3[2] == 1);
  for (int n = 1; n <= 8; ++n) {
    const std::vector<mpz_class> by_peaks = dyck_counts_by_peaks(n);
    REQUIRE(static_cast<int>(by_peaks.size()) == n);
    mpz_class total = 0;
    for (int k = 1; k <= n; ++k) {
      CHECK(by_peaks[k - 1] == narayana(n, k));
      total += by_peaks[k - 1];
    }
    CHECK(total == dyck_count(n));
  }
  CHECK(narayana(4, 2) == 6);
  CHECK_THROWS_AS(narayana(3, 0), domain_error);
  CHECK_THROWS_AS(narayana(3, 4), domain_error);
  CHECK_THROWS_AS(dyck_counts_by_peaks(0), domain_error);
}
