#include "contpath/lattice.hpp"

#include <map>

#include "contpath/series.hpp"

namespace contpath::lattice {

namespace {

long dot(const Point& a, const Point& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point advanced(const Point& p, const Point& v, long times = 1) {
  Point q = p;
  for (std::size_t i = 0; i < q.size(); ++i) q[i] += times * v[i];
  return q;
}

// Recursive enumeration over positive run times.  Convexity lets us abandon
// a direction as soon as one multiple leaves the region: the segment from a
// point inside to any farther multiple would have to re-enter.
mpz_class count_tuples(const StepSet& steps, const Point& q, const Pattern& c,
                       const HalfspaceRegion& region, const Point& at, std::size_t i,
                       long remaining) {
  if (i == c.size()) return (remaining == 0 && at == q) ? 1 : 0;
  const long runs_left = static_cast<long>(c.size() - i - 1);
  const Point& v = steps.steps[static_cast<std::size_t>(c[i] - 1)];
  mpz_class total = 0;
  Point bend = at;
  for (long s = 1; s + runs_left <= remaining; ++s) {
    bend = advanced(bend, v);
    if (!region_contains(region, bend)) break;
    total += count_tuples(steps, q, c, region, bend, i + 1, remaining - s);
  }
  return total;
}

}  // namespace

bool pattern_valid(const StepSet& steps, const Pattern& c) {
  const int m = static_cast<int>(steps.steps.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1 || c[i] > m) return false;
    if (i > 0 && c[i] == c[i - 1]) return false;
  }
  return true;
}

bool region_contains(const HalfspaceRegion& region, const Point& p) {
  for (const Halfspace& h : region) {
    if (dot(h.normal, p) < h.offset) return false;
  }
  return true;
}

Pattern pattern_of(const std::vector<int>& seq) {
  Pattern out;
  for (int label : seq) {
    if (out.empty() || out.back() != label) out.push_back(label);
  }
  return out;
}

mpz_class count_paths(const StepSet& steps, const Point& p, const Point& q, long l) {
  return count_paths_restricted(steps, p, q, l, {});
}

mpz_class count_paths_restricted(const StepSet& steps, const Point& p, const Point& q,
                                 long l, const HalfspaceRegion& region) {
  if (l < 0) throw domain_error("count_paths: require l >= 0");
  if (!region_contains(region, p) || !region_contains(region, q))
    throw domain_error("count_paths_restricted: endpoint outside the region");
  std::map<Point, mpz_class> frontier;
  frontier[p] = 1;
  for (long step = 0; step < l; ++step) {
    std::map<Point, mpz_class> next;
    for (const auto& [pt, cnt] : frontier) {
      for (const Point& v : steps.steps) {
        Point moved = advanced(pt, v);
        if (!region_contains(region, moved)) continue;
        next[moved] += cnt;
      }
    }
    frontier = std::move(next);
  }
  auto it = frontier.find(q);
  return it == frontier.end() ? mpz_class(0) : it->second;
}

mpz_class count_paths_by_pattern(const StepSet& steps, const Point& p, const Point& q,
                                 long l, const Pattern& c, const HalfspaceRegion& region) {
  if (!pattern_valid(steps, c))
    throw domain_error("count_paths_by_pattern: pattern invalid for the step set");
  if (l < 0) throw domain_error("count_paths_by_pattern: require l >= 0");
  if (c.empty()) return (l == 0 && p == q) ? 1 : 0;
  if (l < static_cast<long>(c.size())) return 0;
  if (!region_contains(region, p)) return 0;
  return count_tuples(steps, q, c, region, p, 0, l);
}

mpz_class interior_lattice_points(const PolytopeSpec& poly) {
  // Interior points of the component polytope are exactly the positive
  // integer time tuples (open simplex facets, closed region constraints).
  return count_paths_by_pattern(poly.steps, poly.p, poly.q, poly.t, poly.c, poly.region);
}

StepSet updown_steps() { return StepSet{{{1, 1}, {1, -1}}}; }

HalfspaceRegion upper_half_plane() { return {Halfspace{{0, 1}, 0}}; }

StepSet grid_steps() { return StepSet{{{1, 0}, {0, 1}}}; }

mpz_class dyck_count(int n) {
  if (n < 0) throw domain_error("dyck_count: require n >= 0");
  if (n == 0) return 1;
  return count_paths_restricted(updown_steps(), {0, 0}, {2 * n, 0}, 2 * n,
                                upper_half_plane());
}

std::vector<mpz_class> dyck_counts_by_peaks(int n) {
  if (n < 1) throw domain_error("dyck_counts_by_peaks: require n >= 1");
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(n));
  const StepSet steps = updown_steps();
  const HalfspaceRegion region = upper_half_plane();
  for (int k = 1; k <= n; ++k) {
    Pattern c;
    for (int i = 0; i < k; ++i) {
      c.push_back(1);
      c.push_back(2);
    }
    out.push_back(count_paths_by_pattern(steps, {0, 0}, {2 * n, 0}, 2 * n, c, region));
  }
  return out;
}

mpz_class narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw domain_error("narayana: require 1 <= k <= n");
  mpz_class a, b;
  mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k - 1));
  mpz_class prod = a * b;
  mpz_class out;
  mpz_divexact_ui(out.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace contpath::lattice
