#pragma once

#include <gmpxx.h>

#include <vector>

namespace contpath::lattice {

using Point = std::vector<long>;

// Ordered list of distinct step vectors in Z^d.  Patterns refer to steps by
// their 1-based position here, matching the usual (1, 2, ...) labels.
struct StepSet {
  std::vector<Point> steps;
  int dim() const { return steps.empty() ? 0 : static_cast<int>(steps[0].size()); }
};

// Sequence of step labels with adjacent entries distinct; may be empty.
using Pattern = std::vector<int>;

struct LatticePath {
  Point start;
  std::vector<int> step_indices;  // 1-based labels, one per unit of time
};

// Intersection of closed halfspaces {x : <normal, x> >= offset}; an empty
// list is the whole space.  May describe an empty region.
struct Halfspace {
  Point normal;
  long offset = 0;
};
using HalfspaceRegion = std::vector<Halfspace>;

bool pattern_valid(const StepSet& steps, const Pattern& c);
bool region_contains(const HalfspaceRegion& region, const Point& p);

// Collapse consecutive repeats: (2,2,1,3,3,3,1,1) -> (2,1,3,1); () -> ().
Pattern pattern_of(const std::vector<int>& seq);

// |L_{p,q}(l)|: lattice paths from p to q in exactly l unit-time steps, by
// dynamic programming over time layers.  Counts are exact (they outgrow
// fixed-width integers quickly under products, so big integers from the
// start).
mpz_class count_paths(const StepSet& steps, const Point& p, const Point& q, long l);

// Same, visiting only lattice points inside `region`; p and q must lie inside.
mpz_class count_paths_restricted(const StepSet& steps, const Point& p, const Point& q,
                                 long l, const HalfspaceRegion& region);

// |L^c_{p,q}(l)|: positive integer time tuples (s_0, ..., s_n) with
// sum s_i = l and p + sum s_i v_{c_i} = q, by exhaustive enumeration.
// When `region` is nonempty the path must stay inside it (checking the bend
// points suffices: the region is convex and runs are straight).
mpz_class count_paths_by_pattern(const StepSet& steps, const Point& p, const Point& q,
                                 long l, const Pattern& c,
                                 const HalfspaceRegion& region = {});

// Component polytope of time tuples realizing pattern c from p to q in total
// time t, optionally restricted to a convex region.  The convention for
// "interior": the simplex facets are open (every run time strictly positive)
// while the ambient region constraints stay closed -- the convention under
// which interior integer points reproduce per-pattern path counts.
struct PolytopeSpec {
  StepSet steps;
  Pattern c;
  Point p, q;
  long t = 0;
  HalfspaceRegion region;
};

// Exact count of integer points interior to the polytope, by bounded
// enumeration over bend points (every feasible run time lies in [1, t]).
mpz_class interior_lattice_points(const PolytopeSpec& poly);

// Specializations for paths with steps (1,1),(1,-1) kept weakly above the
// horizontal axis.
StepSet updown_steps();
HalfspaceRegion upper_half_plane();
StepSet grid_steps();  // (1,0),(0,1)

mpz_class dyck_count(int n);                         // via restricted DP
std::vector<mpz_class> dyck_counts_by_peaks(int n);  // entry k-1: paths with k peaks
mpz_class narayana(int n, int k);                    // (1/n) C(n,k) C(n,k-1)

}  // namespace contpath::lattice
