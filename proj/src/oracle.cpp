#include "contpath/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "contpath/rng.hpp"
#include "contpath/series.hpp"
#include "contpath/util.hpp"

namespace contpath::oracle {

namespace {

constexpr std::int64_t kShardSize = 1 << 20;

void validate(const PolytopeSpec& poly) {
  if (poly.kind == PolyKind::binomial_component) {
    if (!(poly.s >= 0) || !(poly.u >= 0))
      throw domain_error("polytope: require s, u >= 0");
    for (std::size_t i = 0; i < poly.c.size(); ++i) {
      if (poly.c[i] < 1 || poly.c[i] > 2 ||
          (i > 0 && poly.c[i] == poly.c[i - 1]))
        throw domain_error("polytope: pattern must alternate over {1,2}");
    }
  } else {
    if (poly.n < 0) throw domain_error("polytope: require n >= 0");
    if (!(0 <= poly.y && poly.y <= poly.x))
      throw domain_error("polytope: require 0 <= y <= x");
  }
}

// Box dimension and per-sample membership test, shared by the shards.
struct BoxProblem {
  std::vector<double> widths;  // one per coordinate
  // membership on a point laid out as the Cartesian coordinates below
  bool (*inside)(const PolytopeSpec&, const double*);
  double box_volume() const {
    double v = 1.0;
    for (double w : widths) v *= w;
    return v;
  }
};

// Binomial component: free coordinates are the first a-1 horizontal run
// times and the first b-1 vertical run times (the last run in each
// direction takes the remainder); membership = partial sums below budget.
bool binomial_inside(const PolytopeSpec& poly, const double* pt) {
  const long a = std::count(poly.c.begin(), poly.c.end(), 1);
  const long b = std::count(poly.c.begin(), poly.c.end(), 2);
  double sum = 0.0;
  long i = 0;
  for (; i < a - 1; ++i) sum += pt[i];
  if (sum > poly.s) return false;
  double sum2 = 0.0;
  for (long j = 0; j < b - 1; ++j) sum2 += pt[i + j];
  return sum2 <= poly.u;
}

// Catalan component in Cartesian coordinates: chains
//   0 <= x_1 <= ... <= x_n <= (x+y)/2,  0 <= y_1 <= ... <= y_n <= (x-y)/2,
// with the domination constraints x_i >= y_i.
bool catalan_inside(const PolytopeSpec& poly, const double* pt) {
  const int n = poly.n;
  for (int i = 0; i + 1 < n; ++i) {
    if (pt[i] > pt[i + 1]) return false;
    if (pt[n + i] > pt[n + i + 1]) return false;
  }
  for (int i = 0; i < n; ++i) {
    if (pt[i] < pt[n + i]) return false;
  }
  return true;
}

BoxProblem make_problem(const PolytopeSpec& poly) {
  BoxProblem prob{};
  if (poly.kind == PolyKind::binomial_component) {
    const auto a = std::count(poly.c.begin(), poly.c.end(), 1);
    const auto b = std::count(poly.c.begin(), poly.c.end(), 2);
    for (long i = 0; i + 1 < a; ++i) prob.widths.push_back(poly.s);
    for (long i = 0; i + 1 < b; ++i) prob.widths.push_back(poly.u);
    prob.inside = binomial_inside;
  } else {
    for (int i = 0; i < poly.n; ++i) prob.widths.push_back((poly.x + poly.y) / 2.0);
    for (int i = 0; i < poly.n; ++i) prob.widths.push_back((poly.x - poly.y) / 2.0);
    prob.inside = catalan_inside;
  }
  return prob;
}

}  // namespace

double gamma_component_volume(const lattice::Pattern& c, double s, double u) {
  PolytopeSpec spec;
  spec.c = c;
  spec.s = s;
  spec.u = u;
  validate(spec);
  const auto a = std::count(c.begin(), c.end(), 1);
  const auto b = std::count(c.begin(), c.end(), 2);
  double fs, fu;
  if (a == 0) {
    fs = (s == 0) ? 1.0 : 0.0;
  } else {
    fs = (s > 0) ? std::pow(s, static_cast<double>(a - 1)) / factorial_d(static_cast<int>(a - 1))
                 : 0.0;
  }
  if (b == 0) {
    fu = (u == 0) ? 1.0 : 0.0;
  } else {
    fu = (u > 0) ? std::pow(u, static_cast<double>(b - 1)) / factorial_d(static_cast<int>(b - 1))
                 : 0.0;
  }
  return fs * fu;
}

lattice::Pattern alternating_pattern(int a, int b, int first) {
  if (a < 0 || b < 0 || std::abs(a - b) > 1)
    throw domain_error("alternating pattern: require |a - b| <= 1");
  if (first != 1 && first != 2) throw domain_error("alternating pattern: first must be 1 or 2");
  if ((a > b && first != 1) || (b > a && first != 2))
    throw domain_error("alternating pattern: the longer direction must start");
  lattice::Pattern c;
  int label = first;
  for (int i = 0; i < a + b; ++i) {
    c.push_back(label);
    label = 3 - label;
  }
  return c;
}

double gamma_total_volume(double s, double u) {
  if (!(s >= 0) || !(u >= 0) || !std::isfinite(s) || !std::isfinite(u))
    throw domain_error("gamma_total_volume: require finite s, u >= 0");
  double total = (s == 0.0 && u == 0.0) ? 1.0 : 0.0;  // the empty pattern
  const int settle = 3 + static_cast<int>(2.0 * std::sqrt(s * u));
  for (int m = 1; m <= 500; ++m) {  // m = number of runs
    double row;
    if (m % 2 == 0) {
      const int a = m / 2;
      row = 2.0 * gamma_component_volume(alternating_pattern(a, a, 1), s, u);
    } else {
      const int a = (m + 1) / 2;
      row = gamma_component_volume(alternating_pattern(a, a - 1, 1), s, u) +
            gamma_component_volume(alternating_pattern(a - 1, a, 2), s, u);
    }
    total += row;
    if (m > settle && row <= total * 1e-17) break;
  }
  return total;
}

VolumeEstimate exact_volume(const PolytopeSpec& poly) {
  validate(poly);
  VolumeEstimate est;
  est.exact = true;
  if (poly.kind == PolyKind::binomial_component) {
    est.value = gamma_component_volume(poly.c, poly.s, poly.u);
    return est;
  }
  if (poly.n == 0) {
    est.value = 1.0;
    return est;
  }
  throw domain_error("exact_volume: no closed form for this polytope");
}

VolumeEstimate mc_volume(const PolytopeSpec& poly, std::int64_t samples,
                         std::uint64_t seed) {
  validate(poly);
  if (samples < 1) throw domain_error("mc_volume: require samples >= 1");

  BoxProblem prob = make_problem(poly);
  const std::size_t dim = prob.widths.size();
  if (dim == 0) {
    // 0-dimensional: a single point, present or not.
    VolumeEstimate est = exact_volume(poly);
    est.samples = 0;
    return est;
  }
  const double box = prob.box_volume();

  std::int64_t hits = 0;
  std::vector<double> pt(dim);
  std::int64_t done = 0;
  for (std::uint64_t shard = 0; done < samples; ++shard) {
    Rng rng(seed, shard);
    const std::int64_t batch = std::min<std::int64_t>(kShardSize, samples - done);
    for (std::int64_t i = 0; i < batch; ++i) {
      for (std::size_t d = 0; d < dim; ++d) pt[d] = rng.next_double() * prob.widths[d];
      if (prob.inside(poly, pt.data())) ++hits;
    }
    done += batch;
  }

  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  VolumeEstimate est;
  est.value = box * p;
  est.std_error = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.samples = samples;
  return est;
}

}  // namespace contpath::oracle
