#pragma once

#include <gmpxx.h>

#include "contpath/series.hpp"

namespace contpath::specfn {

// Modified Bessel functions of the first kind, ascending series
// (all-positive terms, condition number ~1 on z >= 0).
double bessel_i0(double z, const SeriesConfig& cfg = {});
double bessel_i1(double z, const SeriesConfig& cfg = {});

// I_{n+1/2}(z) for integer n >= 0 and z > 0.
//
// The upward recurrence I_{v+1} = I_{v-1} - (2v/z) I_v, seeded with the
// closed forms for I_{+-1/2}, is exact in theory but contaminates the result
// with the growing companion solution: seed rounding of size eps*I_{1/2}(z)
// is amplified by K_{n+1/2}(z)/K_{1/2}(z), which itself has a finite closed
// form.  That makes the error predictable a priori, so bessel_i_half runs
// the recurrence when the bound certifies ~1e-12 relative accuracy and
// otherwise falls back to the ascending series, which is stable everywhere.
double bessel_i_half(int n, double z, const SeriesConfig& cfg = {});

// The two routes, individually.
double bessel_i_half_recurrence(int n, double z);
double bessel_i_half_series(int n, double z, const SeriesConfig& cfg = {});

// A-priori relative-error bound for the recurrence at (n, z) given the value
// it produced; +inf when the amplification overflows (deep instability).
double bessel_i_half_recurrence_error(int n, double z, double result);

// Falling factorial (a)_n = a(a-1)...(a-n+1), exact; (a)_0 = 1, and the
// product vanishes for integer 0 <= a < n.
mpz_class falling_factorial(long a, unsigned n);

}  // namespace contpath::specfn
