#pragma once

namespace contpath {

// n! as a double; +inf for n > 170 (callers treat x/inf == 0 as a vanished
// term).
double factorial_d(int n);

// Binomial coefficient as a double via the multiplicative form; accurate to
// a few ulp per factor, exact for small arguments.
double binomial_d(long n, long k);

// Rising factorial a(a+1)...(a+n-1) as a double.
double rising_d(double a, int n);

}  // namespace contpath
