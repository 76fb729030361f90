#include "contpath/catalan.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "contpath/lattice.hpp"
#include "contpath/quadrature.hpp"

namespace contpath::catalan {

namespace {

std::vector<std::vector<mpz_class>> pascal_rows(int nmax) {
  std::vector<std::vector<mpz_class>> rows(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    rows[n].resize(n + 1);
    rows[n][0] = 1;
    rows[n][n] = 1;
    for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

const std::vector<mpz_class>& factorials(int upto) {
  static std::vector<mpz_class> table{1};
  while (static_cast<int>(table.size()) <= upto)
    table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table;
}

}  // namespace

CoeffTable::CoeffTable(int nmax, int mmax) : nmax_(nmax), mmax_(mmax) {
  if (nmax < 0 || mmax < 0) throw domain_error("coefficient table sizes must be nonnegative");
  const std::size_t tri = static_cast<std::size_t>(mmax + 1) * (mmax + 2) / 2;
  data_.assign(static_cast<std::size_t>(nmax + 1) * tri, mpz_class(0));
  *cell(0, 0, 0) = 1;

  const auto binom = pascal_rows(mmax);
  mpz_class term;
  for (int n = 1; n <= nmax_; ++n) {
    for (int m = 0; m <= mmax_; ++m) {
      for (int k = 0; k <= m; ++k) {
        const int l = m - k;
        mpz_class acc = 0;
        for (int p = 0; p < l; ++p) {
          for (int q = 0; q + p < l; ++q) {
            const int kk = k + p + q - 1;
            if (kk < 0) continue;
            const mpz_class& prev = coeff(n - 1, kk, l - p - q - 1);
            if (prev == 0) continue;
            term = binom[l][p] * binom[l - p - 1][q];
            term *= prev;
            if (q % 2 == 0)
              acc += term;
            else
              acc -= term;
          }
        }
        *cell(n, k, l) = acc;
      }
    }
  }
}

const mpz_class* CoeffTable::cell(int n, int k, int l) const {
  const std::size_t tri = static_cast<std::size_t>(mmax_ + 1) * (mmax_ + 2) / 2;
  const int m = k + l;
  return &data_[n * tri + static_cast<std::size_t>(m) * (m + 1) / 2 + k];
}

mpz_class* CoeffTable::cell(int n, int k, int l) {
  return const_cast<mpz_class*>(std::as_const(*this).cell(n, k, l));
}

const mpz_class& CoeffTable::coeff(int n, int k, int l) const {
  static const mpz_class zero = 0;
  if (n < 0 || k < 0 || l < 0) return zero;
  if (n > nmax_ || k + l > mmax_)
    throw domain_error("coefficient index beyond the precomputed table");
  return *cell(n, k, l);
}

double CoeffTable::eval(int n, double a, double b) const {
  if (n < 0) throw domain_error("component index must be nonnegative");
  if (n > nmax_ || 2 * n > mmax_)
    throw domain_error("component index beyond the precomputed table");
  if (n == 0) return 1.0;
  // Every nonzero coefficient of I_n sits on the diagonal k + l = 2n.
  const auto& fact = factorials(2 * n);
  double sum = 0.0;
  mpq_class r;
  for (int k = 0; k <= 2 * n; ++k) {
    const int l = 2 * n - k;
    const mpz_class& c = coeff(n, k, l);
    if (c == 0) continue;
    r = mpq_class(c, fact[k] * fact[l]);
    r.canonicalize();
    sum += r.get_d() * std::pow(a, k) * std::pow(b, l);
  }
  return sum;
}

namespace {

const CoeffTable& shared_table() {
  static const CoeffTable table(24, 48);
  return table;
}

void check_endpoint(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw domain_error("endpoint must be finite");
  if (y < 0.0 || y > x) throw domain_error("endpoint requires 0 <= y <= x");
}

}  // namespace

double lambda_volume(int n, double x, double y, const CoeffTable& table) {
  check_endpoint(x, y);
  return table.eval(n, y, (x - y) / 2.0);
}

double lambda_volume(int n, double x, double y) {
  if (n > shared_table().nmax())
    throw domain_error("component index beyond the shared table; build a CoeffTable explicitly");
  return lambda_volume(n, x, y, shared_table());
}

std::vector<mpq_class> catalan_series_coeffs(int mmax) {
  if (mmax < 0) throw domain_error("series order must be nonnegative");
  const CoeffTable* table = &shared_table();
  std::unique_ptr<CoeffTable> local;
  if (mmax - 2 > table->nmax() || mmax - 2 > table->mmax()) {
    local = std::make_unique<CoeffTable>(mmax - 2, mmax - 2);
    table = local.get();
  }

  const auto binom = pascal_rows(mmax);
  const auto& fact = factorials(mmax);
  std::vector<mpq_class> coeffs(mmax + 1);
  coeffs[0] = 1;
  for (int m = 2; m <= mmax; ++m) {
    mpz_class total = 0;
    for (int k = 0; k + 2 <= m; ++k) {
      const int l = m - 2 - k;
      mpz_class inner = 0;
      for (int n = 1; n <= l + 1; ++n) inner += table->coeff(n - 1, k, l);
      if (inner == 0) continue;
      mpz_class outer = 0;
      for (int p = 0; p <= k + 1; ++p) {
        if (l > m - p - 1) continue;
        const mpz_class t = binom[m][p] * binom[m - p - 1][l];
        if ((k + 1 - p) % 2 == 0)
          outer += t;
        else
          outer -= t;
      }
      total += inner * outer;
    }
    coeffs[m] = mpq_class(total, fact[m]);
    coeffs[m].canonicalize();
  }
  return coeffs;
}

CatalanValue catalan_C(double x, double y, int n_max) {
  check_endpoint(x, y);
  if (n_max < 0) throw domain_error("truncation order must be nonnegative");

  const CoeffTable* table = &shared_table();
  std::unique_ptr<CoeffTable> local;
  if (n_max > table->nmax() || 2 * n_max > table->mmax()) {
    local = std::make_unique<CoeffTable>(n_max, 2 * n_max);
    table = local.get();
  }

  CatalanValue out;
  out.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) out.value += lambda_volume(n, x, y, *table);

  // Term-by-term majorant: vol of the n-th component is at most
  // ((x+y)(x-y))^n / (n!)^2, the volume of its bounding box.
  const double w = (x + y) * (x - y);
  double term = 1.0;
  for (int n = 1; n <= n_max + 1; ++n) term *= w / (static_cast<double>(n) * n);
  double tail = 0.0;
  for (int n = n_max + 1; n < n_max + 1000; ++n) {
    tail += term;
    term *= w / (static_cast<double>(n + 1) * (n + 1));
    if (term <= tail * std::numeric_limits<double>::epsilon()) break;
  }
  out.tail_bound = tail;
  return out;
}

double integral_equation_residual(double x, double y) {
  check_endpoint(x, y);
  const double lhs = catalan_C(x, y).value;
  const double outer = integrate_checked(
      [&](double b) {
        return integrate_checked(
            [&](double a) { return catalan_C(a + 2.0 * b, a).value; }, 0.0,
            (x + y) / 2.0 - b, 1e-9, 1e-12);
      },
      0.0, (x - y) / 2.0, 1e-9, 1e-12);
  return std::abs(lhs - (1.0 + outer));
}

std::vector<NarayanaRow> narayana_anchor(int n) {
  if (n < 1) throw domain_error("semilength must be positive");
  std::vector<NarayanaRow> rows;
  for (int k = 1; k <= n; ++k) {
    lattice::Pattern pattern;
    for (int i = 0; i < k; ++i) {
      pattern.push_back(1);
      pattern.push_back(2);
    }
    NarayanaRow row;
    row.ups = k;
    row.lattice_count = lattice::count_paths_by_pattern(
        lattice::updown_steps(), {0, 0}, {2 * n, 0}, 2 * n, pattern,
        lattice::upper_half_plane());
    row.narayana = lattice::narayana(n, k);
    row.volume = lambda_volume(k - 1, 2.0 * n, 0.0);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace contpath::catalan
