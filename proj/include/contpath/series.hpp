#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace contpath {

// Precondition violations (bad arguments, points outside a function's domain).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A series or quadrature failed to reach its tolerance within its budget.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tolerances shared by every series evaluator (and propagated into the
// quadrature engine).
struct SeriesConfig {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_terms = 500;
};

// Built-in defaults with the CONTPATH_TOL environment override applied
// (CONTPATH_TOL replaces rel_tol; flags still win over it in the CLI).
inline SeriesConfig config_from_env() {
  SeriesConfig cfg;
  if (const char* env = std::getenv("CONTPATH_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) cfg.rel_tol = v;
  }
  return cfg;
}

// Stop rule: two consecutive terms with |term| <= rel_tol*|sum| + abs_tol.
// One small term is not enough: series that interleave zero or near-zero
// terms (odd/even splits) would terminate early on a single spurious hit.
class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(const SeriesConfig& cfg) : cfg_(cfg) {}

  // Adds one term; true once the stop rule is satisfied.
  bool add(double term) {
    sum_ += term;
    ++terms_;
    const double thresh = cfg_.rel_tol * std::fabs(sum_) + cfg_.abs_tol;
    small_run_ = (std::fabs(term) <= thresh) ? small_run_ + 1 : 0;
    return small_run_ >= 2;
  }

  double value() const { return sum_; }
  int terms() const { return terms_; }

 private:
  SeriesConfig cfg_;
  double sum_ = 0.0;
  int terms_ = 0;
  int small_run_ = 0;
};

}  // namespace contpath
