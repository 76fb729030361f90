#pragma once

#include <cstdint>

#include "contpath/lattice.hpp"

namespace contpath::oracle {

enum class PolyKind { binomial_component, catalan_component };

// Volume-side polytope description.
//   binomial_component: pattern c over the grid steps (1,0),(0,1) with
//     horizontal time budget s and vertical time budget u;
//   catalan_component: component index n with endpoint (x, y), 0 <= y <= x.
struct PolytopeSpec {
  PolyKind kind = PolyKind::binomial_component;
  lattice::Pattern c;      // binomial
  double s = 0, u = 0;     // binomial budgets
  int n = 0;               // catalan
  double x = 0, y = 0;     // catalan endpoint
};

struct VolumeEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  bool exact = false;  // exact => std_error == 0, no sampling happened
};

// Volume of the closed time-tuple polytope for an alternating pattern c with
// a entries equal to 1 and b entries equal to 2:
//     s^{a-1}/(a-1)! * u^{b-1}/(b-1)!
// under the convention vol(simplex of n positive parts summing to t) = t^n/n!.
// A pattern that needs positive time in a direction with zero budget gives 0;
// a direction the pattern never uses contributes the 0-dimensional factor 1
// when its budget is 0 (and 0 otherwise, since leftover budget is infeasible).
double gamma_component_volume(const lattice::Pattern& c, double s, double u);

// The alternating pattern with a runs of 1 and b runs of 2 starting with
// `first` (|a-b| <= 1; when a == b both starts are realizable and describe
// distinct patterns with equal component volume).
lattice::Pattern alternating_pattern(int a, int b, int first);

// Total volume of Gamma(s, u): component volumes summed over every
// alternating pattern, both starts counted.  For s, u > 0 this reproduces
// the series evaluator of {x<s>} with x = s+u; on the axes it instead gives
// the bare surviving-pattern volume (the series limit also counts patterns
// that degenerate there, so the two deliberately differ on the boundary).
double gamma_total_volume(double s, double u);

// Hit-or-miss Monte Carlo over the polytope's Cartesian coordinate box.
// Deterministic per (seed, samples): samples are sharded into fixed-size
// streams derived from the seed and merged by summing hit counts, so a
// parallel run would produce the identical estimate.  Zero-dimensional
// polytopes are reported exactly without sampling.
VolumeEstimate mc_volume(const PolytopeSpec& poly, std::int64_t samples,
                         std::uint64_t seed);

// Exact volume where a closed form exists (binomial components always;
// catalan components for n == 0).
VolumeEstimate exact_volume(const PolytopeSpec& poly);

}  // namespace contpath::oracle
