#include "contpath/util.hpp"

#include <array>
#include <limits>

namespace contpath {

namespace {

std::array<double, 171> build_factorials() {
  std::array<double, 171> f{};
  f[0] = 1.0;
  for (int i = 1; i <= 170; ++i) f[i] = f[i - 1] * i;
  return f;
}

const std::array<double, 171> kFactorials = build_factorials();

}  // namespace

double factorial_d(int n) {
  if (n < 0) return std::numeric_limits<double>::quiet_NaN();
  if (n > 170) return std::numeric_limits<double>::infinity();
  return kFactorials[static_cast<std::size_t>(n)];
}

double binomial_d(long n, long k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double rising_d(double a, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= (a + i);
  return r;
}

}  // namespace contpath
