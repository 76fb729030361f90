#pragma once

#include <gmpxx.h>

#include <vector>

#include "contpath/series.hpp"

namespace contpath::catalan {

// Exact integer coefficients I^n_{k,l} of the component volume polynomials
//     I_n(a, b) = sum_{k,l} I^n_{k,l} a^k/k! b^l/l!,
// stored densely for n <= nmax, k + l <= mmax.  Built once by the signed
// recursion
//     I^n_{k,l} = sum_{p=0}^{l-1} sum_{q=0}^{l-p-1}
//                 (-1)^q C(l,p) C(l-p-1,q) I^{n-1}_{k+p+q-1, l-p-q-1}
// from I^0_{k,l} = delta_{k0} delta_{l0}; the alternating signs are why the
// table is exact integers rather than floating point.  Immutable afterwards
// and safe to share across threads.
class CoeffTable {
 public:
  CoeffTable(int nmax, int mmax);

  int nmax() const { return nmax_; }
  int mmax() const { return mmax_; }

  // I^n_{k,l}; zero for negative indices, error beyond the stored range.
  const mpz_class& coeff(int n, int k, int l) const;

  // I_n(a, b) evaluated in doubles; each coefficient enters as the exact
  // rational I^n_{k,l}/(k! l!).  Uses homogeneity (k + l = 2n), so requires
  // 2n <= mmax.
  double eval(int n, double a, double b) const;

 private:
  int nmax_, mmax_;
  std::vector<mpz_class> data_;
  const mpz_class* cell(int n, int k, int l) const;
  mpz_class* cell(int n, int k, int l);
};

// Volume of the component with index n and endpoint (x, y), 0 <= y <= x:
// the polynomial I_n evaluated at (y, (x-y)/2).  The table overload requires
// 2n <= table.mmax(); the convenience overload uses a shared table covering
// n <= 24 and fails explicitly beyond it.
double lambda_volume(int n, double x, double y, const CoeffTable& table);
double lambda_volume(int n, double x, double y);

// Taylor coefficients of the one-variable series C(2x): entry m is the exact
// rational coefficient of x^m (an integer over m!).
std::vector<mpq_class> catalan_series_coeffs(int mmax);

// Truncated two-variable sum C(x,y) = sum_n vol(n-th component) with the
// explicit majorant tail sum_{n > n_max} (x+y)^n (x-y)^n / (n!)^2.
struct CatalanValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int n_max = 0;
};
CatalanValue catalan_C(double x, double y, int n_max = 20);

// |C(x,y) - (1 + int_0^{(x-y)/2} int_0^{(x+y)/2-b} C(a+2b, a) da db)| by
// nested adaptive quadrature.
double integral_equation_residual(double x, double y);

// For semilength n, one row per up-run count k: the exact interior point
// count of the k-up-run component polytope, the closed-form Narayana value,
// and the continuous component volume.  Counts match the closed form and
// sum to the n-th Catalan number.
struct NarayanaRow {
  int ups = 0;
  mpz_class lattice_count;
  mpz_class narayana;
  double volume = 0.0;
};
std::vector<NarayanaRow> narayana_anchor(int n);

}  // namespace contpath::catalan
