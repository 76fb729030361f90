#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "contpath/series.hpp"

namespace contpath::dist {

// int_0^x {x<s>} ds, by adaptive quadrature (closed form: 2(e^x - 1)).
double binom_integral(double x, const SeriesConfig& cfg = {});

// Normalizer b_p(x) = int_0^x {x<s>} p^s (1-p)^{x-s} ds for 0 < p < 1.
// `normalizer` integrates numerically, short-circuiting p = 1/2 to the
// closed form; the two series routes are exposed for cross-checking.
double normalizer(double x, double p, const SeriesConfig& cfg = {});
double normalizer_half(double x);  // (e^x - 1) 2^{1-x}

// Double series over (k, n) in powers of L = ln(p/(1-p)); summed along
// anti-diagonals k + n = m so the stop rule sees factorially decaying
// blocks.  Valid for any 0 < p < 1 (at p = 1/2 only k = 0 survives).
double normalizer_series(double x, double p, const SeriesConfig& cfg = {});

// Half-integer Bessel series; p = 1/2 is a genuine pole of the rewrite
// (terms carry (x/|L|)^{n+1/2}), so it is rejected here.
double normalizer_bessel(double x, double p, const SeriesConfig& cfg = {});

// Centered density d_x(s) = {x <x/2 + s>} / (2(e^x - 1)) on [-x/2, x/2],
// zero outside.
double density(double x, double s, const SeriesConfig& cfg = {});

// M_l = int_0^x t^l {x<t>} dt by series (l = 0 is the closed form above).
double moment_integral(double x, unsigned l, const SeriesConfig& cfg = {});

// Uncentered moments E(s^l) of the p = 1/2 distribution.
double moment_half(double x, unsigned l, const SeriesConfig& cfg = {});

// General-p moments via the (k, n) double series; delegates to moment_half
// at p = 1/2.  Fails loudly (convergence_error) if the anti-diagonal blocks
// have not decayed within the term budget.
double moment_p(double x, double p, unsigned l, const SeriesConfig& cfg = {});

// Moments of the centered density d_x.  Odd orders vanish exactly (d_x is
// even); even order 2k expands binomially over the M_l.
double centered_moment(double x, unsigned order, const SeriesConfig& cfg = {});

// i.i.d. draws from d_x by rejection against the uniform envelope of height
// d_x(0) (the maximum).  Deterministic per seed.
std::vector<double> sample(double x, std::int64_t count, std::uint64_t seed,
                           const SeriesConfig& cfg = {});

// int f d_x for each x in xs; as x -> 0 the values approach f(0) (the
// centered densities concentrate to a point mass).
std::vector<double> delta_limit_check(const std::function<double(double)>& f,
                                      const std::vector<double>& xs,
                                      const SeriesConfig& cfg = {});

}  // namespace contpath::dist
