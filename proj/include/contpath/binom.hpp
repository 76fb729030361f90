#pragma once

#include <gmpxx.h>

#include <array>
#include <vector>

#include "contpath/series.hpp"

namespace contpath::binom {

// The continuous binomial coefficient {x<s>} for 0 <= s <= x:
//     sum_{n>=0} (x+2n+2) * (s(x-s))^n / (n!(n+1)!)
// All terms are positive on the domain, so the series is the numerically
// preferred evaluator.  Boundary values are pinned to 2+x exactly.
double cont_binom(double x, double s, const SeriesConfig& cfg = {});

// Same value through the modified Bessel closed form
//     2 I0(2 sqrt(w)) + (x / sqrt(w)) I1(2 sqrt(w)),  w = s(x-s),
// with the limit value 2+x at the boundary (I1(z)/z -> 1/2).
double cont_binom_bessel(double x, double s, const SeriesConfig& cfg = {});

// Central finite-difference residual of (d^2/dx^2 + d^2/dx ds) f = f at
// (x, s); O(h^2) for interior points with margin min(s, x-s) >= 2h.
double pde_residual(double x, double s, double h, const SeriesConfig& cfg = {});

// {(t+1)s <s>} as the expansion in t and s with nonnegative integer
// coefficients, truncated after the t^order block.
double expansion_ts(double t, double s, int order);

// Exact coefficient of t^n s^m / (n! m!) in that expansion.  Nonzero only
// for m in {2n-1, 2n, 2n+1}: 2*(2n)_n, (2n+1)_n and (2n-1)_n respectively
// (at n = 0 this reduces to the constant block 2 + s).
mpz_class expansion_coeff(unsigned n, unsigned m);

// {2s<s>} = 2 * sum_n C(n, floor(n/2)) s^n / n!.
double midpoint_series(double s, const SeriesConfig& cfg = {});

// A finite family of disjoint closed subintervals of [0, x], kept in
// increasing order; total length is the horizontal budget s.
struct Interval {
  double a = 0, b = 0;
};
struct IntervalFamily {
  std::vector<Interval> parts;
  double total_length() const {
    double s = 0;
    for (const Interval& it : parts) s += it.b - it.a;
    return s;
  }
};

// Directed path in the plane with steps 1 = (1,0) and 2 = (0,1): a pattern,
// its run times, and the derived bend points starting at the origin.
struct DirectedPath {
  std::vector<int> pattern;
  std::vector<double> times;
  std::vector<std::array<double, 2>> bends;  // pattern.size() + 1 entries
};

// The interval-family correspondence into the path space Gamma(s, x-s):
// member intervals become horizontal runs, gaps (including a leading gap
// when a_1 > 0 and a trailing gap when b_n < x) become vertical runs.
// The empty family maps to the single vertical run of time x.
// Touching intervals ([a,b],[b,c]) are rejected as malformed input.
DirectedPath interval_family_to_path(const IntervalFamily& family, double x);

}  // namespace contpath::binom
