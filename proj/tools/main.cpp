// Command-line front end: every evaluator and oracle in the library behind
// one subcommand tree, emitting CSV (default) or JSON records.  stdout is
// data, stderr is diagnostics; exit codes: 0 ok, 1 domain/convergence error,
// 2 usage error, 3 verification failure.

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "contpath/binom.hpp"
#include "contpath/catalan.hpp"
#include "contpath/dist.hpp"
#include "contpath/lattice.hpp"
#include "contpath/oracle.hpp"
#include "contpath/series.hpp"
#include "contpath/specfn.hpp"
#include "contpath/verify.hpp"
#include "json.hpp"

namespace {

using namespace contpath;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const mpz_class& v) { return v.get_str(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

struct Record {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Context {
  double tol = 0.0;  // --tol override; 0 means "not given"
  std::string format = "csv";
  Record rec;
  int exit_code = 0;

  SeriesConfig config() const {
    SeriesConfig cfg = config_from_env();
    if (tol > 0.0) cfg.rel_tol = tol;
    return cfg;
  }
  void tol_meta() {
    const SeriesConfig cfg = config();
    meta("rel_tol", fmt(cfg.rel_tol));
    meta("max_terms", std::to_string(cfg.max_terms));
  }
  void meta(const std::string& k, std::string v) { rec.meta.emplace_back(k, std::move(v)); }
  void columns(std::initializer_list<std::string> cols) { rec.columns = cols; }
  void row(std::vector<std::string> r) { rec.rows.push_back(std::move(r)); }
  void single(const std::string& col, std::string v) {
    rec.columns = {col};
    rec.rows.push_back({std::move(v)});
  }
};

void print_record(const Context& ctx) {
  const Record& r = ctx.rec;
  std::string out;
  if (ctx.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    auto p = nlohmann::ordered_json::object();
    for (const auto& kv : r.params) p[kv.first] = kv.second;
    j["params"] = p;
    auto m = nlohmann::ordered_json::object();
    for (const auto& kv : r.meta) m[kv.first] = kv.second;
    j["meta"] = m;
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    out = j.dump(2) + "\n";
  } else {
    out = "# command: " + r.command + "\n";
    for (const auto& kv : r.params) out += "# " + kv.first + ": " + kv.second + "\n";
    for (const auto& kv : r.meta) out += "# " + kv.first + ": " + kv.second + "\n";
    for (std::size_t i = 0; i < r.columns.size(); ++i)
      out += (i ? "," : "") + csv_field(r.columns[i]);
    out += "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
      out += "\n";
    }
  }
  std::fputs(out.c_str(), stdout);
}

// ---- flag-value parsing ----------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  if (s.empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

long to_long(const std::string& s) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0') throw domain_error("not an integer: '" + s + "'");
  return v;
}

double to_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw domain_error("not a number: '" + s + "'");
  return v;
}

lattice::Point parse_point(const std::string& s) {
  lattice::Point p;
  for (const auto& part : split(s, ',')) p.push_back(to_long(part));
  if (p.empty()) throw domain_error("empty point");
  return p;
}

lattice::Pattern parse_pattern(const std::string& s) {
  lattice::Pattern c;
  for (const auto& part : split(s, ',')) c.push_back(static_cast<int>(to_long(part)));
  return c;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> v;
  for (const auto& part : split(s, ',')) v.push_back(to_double(part));
  return v;
}

binom::IntervalFamily parse_intervals(const std::string& s) {
  binom::IntervalFamily family;
  for (const auto& part : split(s, ',')) {
    const auto ends = split(part, ':');
    if (ends.size() != 2) throw domain_error("interval must look like a:b, got '" + part + "'");
    family.parts.push_back({to_double(ends[0]), to_double(ends[1])});
  }
  return family;
}

lattice::StepSet parse_steps(const std::string& name) {
  if (name == "updown") return lattice::updown_steps();
  if (name == "grid") return lattice::grid_steps();
  throw domain_error("unknown step set '" + name + "' (want updown or grid)");
}

// ---- command table ----------------------------------------------------------

// One row per library operation: the operation's name and a runnable
// invocation of the unique subcommand that reaches it.  The coverage test
// enumerates this table, checks it against the public headers, and runs
// every invocation.
const std::vector<std::pair<std::string, std::string>>& command_table() {
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"bessel_i0", "specfn bessel-i0 --z 1.5"},
      {"bessel_i1", "specfn bessel-i1 --z 1.5"},
      {"bessel_i_half", "specfn bessel-i-half --n 2 --z 1.5"},
      {"falling_factorial", "specfn falling --a 5 --n 2"},
      {"pattern_of", "lattice pattern --seq 1,1,2,2,1"},
      {"count_paths", "lattice count --steps grid --from 0,0 --to 2,1 --time 3"},
      {"count_paths_restricted",
       "lattice count --steps updown --from 0,0 --to 4,0 --time 4 --upper"},
      {"count_paths_by_pattern",
       "lattice count-pattern --steps grid --from 0,0 --to 2,1 --time 3 --pattern 1,2,1"},
      {"interior_lattice_points",
       "lattice interior --steps updown --from 0,0 --to 6,0 --time 6 --pattern 1,2,1,2 "
       "--upper"},
      {"dyck_count", "lattice dyck --n 5"},
      {"dyck_counts_by_peaks", "lattice peaks --n 4"},
      {"narayana", "lattice narayana --n 4 --k 2"},
      {"gamma_component_volume", "oracle component --pattern 1,2,1 --s 2 --u 1"},
      {"gamma_total_volume", "binom eval --x 3 --s 1 --method oracle"},
      {"mc_volume",
       "oracle volume --kind binomial --pattern 1,2 --s 1 --u 1 --mc-samples 10000 "
       "--seed 42"},
      {"exact_volume", "oracle exact --kind binomial --pattern 1,2,1 --s 2 --u 1"},
      {"cont_binom", "binom eval --x 3 --s 1"},
      {"cont_binom_bessel", "binom eval --x 3 --s 1 --method bessel"},
      {"pde_residual", "binom pde --x 3 --s 1 --h 0.01"},
      {"expansion_ts", "binom expansion --t 1 --s 1 --order 12"},
      {"expansion_coeff", "binom expansion-coeff --n 1 --m 2"},
      {"midpoint_series", "binom midpoint --s 1"},
      {"interval_family_to_path", "binom path --x 5 --intervals 0:1.8,2.5:3.5,4.2:5"},
      {"binom_integral", "binom integral --x 2"},
      {"normalizer", "dist normalizer --x 2 --p 0.3"},
      {"normalizer_half", "dist normalizer --x 2 --p 0.5"},
      {"normalizer_series", "dist normalizer --x 2 --p 0.3 --method series"},
      {"normalizer_bessel", "dist normalizer --x 2 --p 0.3 --method bessel"},
      {"density", "dist density --x 2 --from=-1 --to 1 --points 5"},
      {"moment_integral", "dist moments --x 2 --l 2 --raw"},
      {"moment_half", "dist moments --x 2 --p 0.5 --l 2"},
      {"moment_p", "dist moments --x 2 --p 0.3 --l 2"},
      {"centered_moment", "dist moments --x 2 --l 2 --centered"},
      {"sample", "dist sample --x 2 --n 5 --seed 42"},
      {"delta_limit_check", "dist delta --xs 1,0.5,0.1,0.02"},
      {"lambda_volume", "catalan lambda --n 1 --x 2 --y 0"},
      {"coeff_table", "catalan table --nmax 3 --mmax 6"},
      {"catalan_series_coeffs", "catalan coeffs --mmax 8"},
      {"catalan_C", "catalan eval --x 2 --y 0 --nmax 20"},
      {"integral_equation_residual", "catalan residual --x 2 --y 0"},
      {"narayana_anchor", "catalan narayana --n 3"},
      {"run_all", "verify all --fast"},
  };
  return table;
}

// ---- subcommand wiring -------------------------------------------------------

void add_specfn(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("specfn", "Bessel evaluators and exact falling factorials");
  sub->require_subcommand(1);

  {
    auto z = std::make_shared<double>(0.0);
    auto* c = sub->add_subcommand("bessel-i0", "I0(z) by ascending series");
    c->add_option("--z", *z, "argument, z >= 0")->required();
    c->callback([&ctx, z] {
      ctx.tol_meta();
      ctx.single("value", fmt(specfn::bessel_i0(*z, ctx.config())));
    });
  }
  {
    auto z = std::make_shared<double>(0.0);
    auto* c = sub->add_subcommand("bessel-i1", "I1(z) by ascending series");
    c->add_option("--z", *z, "argument, z >= 0")->required();
    c->callback([&ctx, z] {
      ctx.tol_meta();
      ctx.single("value", fmt(specfn::bessel_i1(*z, ctx.config())));
    });
  }
  {
    struct Opts {
      int n = 0;
      double z = 0.0;
      std::string method = "auto";
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("bessel-i-half", "I_{n+1/2}(z)");
    c->add_option("--n", o->n, "order index, n >= 0")->required();
    c->add_option("--z", o->z, "argument, z > 0")->required();
    c->add_option("--method", o->method, "auto | recurrence | series")
        ->check(CLI::IsMember({"auto", "recurrence", "series"}));
    c->callback([&ctx, o] {
      ctx.tol_meta();
      double v;
      if (o->method == "recurrence")
        v = specfn::bessel_i_half_recurrence(o->n, o->z);
      else if (o->method == "series")
        v = specfn::bessel_i_half_series(o->n, o->z, ctx.config());
      else
        v = specfn::bessel_i_half(o->n, o->z, ctx.config());
      ctx.single("value", fmt(v));
    });
  }
  {
    struct Opts {
      long a = 0;
      unsigned n = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("falling", "falling factorial a(a-1)...(a-n+1), exact");
    c->add_option("--a", o->a)->required();
    c->add_option("--n", o->n)->required();
    c->callback([&ctx, o] { ctx.single("value", fmt(specfn::falling_factorial(o->a, o->n))); });
  }
}

void add_lattice(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("lattice", "exact path counting");
  sub->require_subcommand(1);

  {
    auto seq = std::make_shared<std::string>();
    auto* c = sub->add_subcommand("pattern", "collapse a step sequence to its pattern");
    c->add_option("--seq", *seq, "comma-separated step labels")->required();
    c->callback([&ctx, seq] {
      const auto pat = lattice::pattern_of(parse_pattern(*seq));
      std::string joined;
      for (std::size_t i = 0; i < pat.size(); ++i)
        joined += (i ? "," : "") + std::to_string(pat[i]);
      ctx.single("pattern", joined);
    });
  }

  struct WalkOpts {
    std::string steps, from, to, pattern;
    long time = 0;
    bool upper = false;
  };
  const auto add_walk_flags = [](CLI::App* c, std::shared_ptr<WalkOpts> o, bool with_pattern) {
    c->add_option("--steps", o->steps, "updown | grid")->required();
    c->add_option("--from", o->from, "start point, e.g. 0,0")->required();
    c->add_option("--to", o->to, "end point")->required();
    c->add_option("--time", o->time, "number of unit steps")->required();
    if (with_pattern) c->add_option("--pattern", o->pattern, "run pattern, e.g. 1,2,1")->required();
    c->add_flag("--upper", o->upper, "restrict to the upper half plane");
  };

  {
    auto o = std::make_shared<WalkOpts>();
    auto* c = sub->add_subcommand("count", "paths from --from to --to in --time steps");
    add_walk_flags(c, o, false);
    c->callback([&ctx, o] {
      const auto steps = parse_steps(o->steps);
      const auto p = parse_point(o->from), q = parse_point(o->to);
      const mpz_class n = o->upper ? lattice::count_paths_restricted(
                                         steps, p, q, o->time, lattice::upper_half_plane())
                                   : lattice::count_paths(steps, p, q, o->time);
      ctx.single("count", fmt(n));
    });
  }
  {
    auto o = std::make_shared<WalkOpts>();
    auto* c = sub->add_subcommand("count-pattern", "paths realizing one run pattern");
    add_walk_flags(c, o, true);
    c->callback([&ctx, o] {
      const auto region =
          o->upper ? lattice::upper_half_plane() : lattice::HalfspaceRegion{};
      ctx.single("count",
                 fmt(lattice::count_paths_by_pattern(parse_steps(o->steps), parse_point(o->from),
                                                     parse_point(o->to), o->time,
                                                     parse_pattern(o->pattern), region)));
    });
  }
  {
    auto o = std::make_shared<WalkOpts>();
    auto* c = sub->add_subcommand("interior", "integer points interior to a component polytope");
    add_walk_flags(c, o, true);
    c->callback([&ctx, o] {
      lattice::PolytopeSpec poly{parse_steps(o->steps), parse_pattern(o->pattern),
                                 parse_point(o->from), parse_point(o->to), o->time,
                                 o->upper ? lattice::upper_half_plane()
                                          : lattice::HalfspaceRegion{}};
      ctx.single("count", fmt(lattice::interior_lattice_points(poly)));
    });
  }
  {
    auto n = std::make_shared<int>(0);
    auto* c = sub->add_subcommand("dyck", "Dyck paths of semilength n");
    c->add_option("--n", *n)->required();
    c->callback([&ctx, n] { ctx.single("count", fmt(lattice::dyck_count(*n))); });
  }
  {
    auto n = std::make_shared<int>(0);
    auto* c = sub->add_subcommand("peaks", "Dyck paths of semilength n grouped by peak count");
    c->add_option("--n", *n)->required();
    c->callback([&ctx, n] {
      ctx.columns({"peaks", "count"});
      const auto counts = lattice::dyck_counts_by_peaks(*n);
      for (std::size_t k = 0; k < counts.size(); ++k)
        ctx.row({std::to_string(k + 1), fmt(counts[k])});
    });
  }
  {
    struct Opts {
      int n = 0, k = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("narayana", "closed-form Narayana number");
    c->add_option("--n", o->n)->required();
    c->add_option("--k", o->k)->required();
    c->callback([&ctx, o] { ctx.single("value", fmt(lattice::narayana(o->n, o->k))); });
  }
}

struct OracleOpts {
  std::string kind = "binomial", pattern;
  double s = 0, u = 0, x = 0, y = 0;
  int n = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 12345;
};

oracle::PolytopeSpec oracle_spec(const OracleOpts& o) {
  oracle::PolytopeSpec spec;
  if (o.kind == "binomial") {
    spec.kind = oracle::PolyKind::binomial_component;
    spec.c = parse_pattern(o.pattern);
    spec.s = o.s;
    spec.u = o.u;
  } else {
    spec.kind = oracle::PolyKind::catalan_component;
    spec.n = o.n;
    spec.x = o.x;
    spec.y = o.y;
  }
  return spec;
}

void add_oracle_flags(CLI::App* c, std::shared_ptr<OracleOpts> o) {
  c->add_option("--kind", o->kind, "binomial | catalan")
      ->check(CLI::IsMember({"binomial", "catalan"}));
  c->add_option("--pattern", o->pattern, "binomial: alternating run pattern");
  c->add_option("--s", o->s, "binomial: horizontal budget");
  c->add_option("--u", o->u, "binomial: vertical budget");
  c->add_option("--n", o->n, "catalan: component index");
  c->add_option("--x", o->x, "catalan: endpoint sum coordinate");
  c->add_option("--y", o->y, "catalan: endpoint height");
}

void add_oracle(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("oracle", "independent volume computations");
  sub->require_subcommand(1);

  {
    struct Opts {
      std::string pattern;
      double s = 0, u = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("component", "closed-form volume of one pattern component");
    c->add_option("--pattern", o->pattern)->required();
    c->add_option("--s", o->s)->required();
    c->add_option("--u", o->u)->required();
    c->callback([&ctx, o] {
      ctx.single("value", fmt(oracle::gamma_component_volume(parse_pattern(o->pattern), o->s,
                                                             o->u)));
    });
  }
  {
    auto o = std::make_shared<OracleOpts>();
    auto* c = sub->add_subcommand("volume", "hit-or-miss Monte Carlo volume");
    add_oracle_flags(c, o);
    c->add_option("--mc-samples", o->samples, "number of draws")->required();
    c->add_option("--seed", o->seed, "RNG seed");
    c->callback([&ctx, o] {
      const auto est = oracle::mc_volume(oracle_spec(*o), o->samples, o->seed);
      ctx.columns({"value", "std_error", "samples", "exact"});
      ctx.row({fmt(est.value), fmt(est.std_error), std::to_string(est.samples),
               est.exact ? "1" : "0"});
    });
  }
  {
    auto o = std::make_shared<OracleOpts>();
    auto* c = sub->add_subcommand("exact", "closed-form volume where one exists");
    add_oracle_flags(c, o);
    c->callback([&ctx, o] {
      const auto est = oracle::exact_volume(oracle_spec(*o));
      ctx.single("value", fmt(est.value));
    });
  }
}

void add_binom(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("binom", "continuous binomial coefficient evaluators");
  sub->require_subcommand(1);

  {
    struct Opts {
      double x = 0, s = 0;
      std::string method = "series";
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("eval", "{x <s>}");
    c->add_option("--x", o->x)->required();
    c->add_option("--s", o->s)->required();
    c->add_option("--method", o->method, "series | bessel | oracle")
        ->check(CLI::IsMember({"series", "bessel", "oracle"}));
    c->callback([&ctx, o] {
      ctx.tol_meta();
      ctx.meta("method", o->method);
      double v;
      if (o->method == "bessel")
        v = binom::cont_binom_bessel(o->x, o->s, ctx.config());
      else if (o->method == "oracle")
        v = oracle::gamma_total_volume(o->s, o->x - o->s);
      else
        v = binom::cont_binom(o->x, o->s, ctx.config());
      ctx.single("value", fmt(v));
    });
  }
  {
    auto x = std::make_shared<double>(0.0);
    auto* c = sub->add_subcommand("integral", "integral of {x <s>} over s in [0, x]");
    c->add_option("--x", *x)->required();
    c->callback([&ctx, x] {
      ctx.tol_meta();
      ctx.single("value", fmt(dist::binom_integral(*x, ctx.config())));
    });
  }
  {
    struct Opts {
      double x = 0, s = 0, h = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("pde", "finite-difference residual of the defining PDE");
    c->set_help_flag("--help", "print usage");  // frees -h for the step size
    c->add_option("--x", o->x)->required();
    c->add_option("--s", o->s)->required();
    c->add_option("--h", o->h, "step size")->required();
    c->callback([&ctx, o] {
      ctx.tol_meta();
      ctx.single("value", fmt(binom::pde_residual(o->x, o->s, o->h, ctx.config())));
    });
  }
  {
    struct Opts {
      double t = 0, s = 0;
      int order = 16;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("expansion", "{(t+1)s <s>} by the two-variable expansion");
    c->add_option("--t", o->t)->required();
    c->add_option("--s", o->s)->required();
    c->add_option("--order", o->order, "highest t power");
    c->callback([&ctx, o] { ctx.single("value", fmt(binom::expansion_ts(o->t, o->s, o->order))); });
  }
  {
    struct Opts {
      unsigned n = 0, m = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("expansion-coeff",
                                  "exact coefficient of t^n s^m / (n! m!) in the expansion");
    c->add_option("--n", o->n)->required();
    c->add_option("--m", o->m)->required();
    c->callback([&ctx, o] { ctx.single("value", fmt(binom::expansion_coeff(o->n, o->m))); });
  }
  {
    auto s = std::make_shared<double>(0.0);
    auto* c = sub->add_subcommand("midpoint", "{2s <s>}");
    c->add_option("--s", *s)->required();
    c->callback([&ctx, s] {
      ctx.tol_meta();
      ctx.single("value", fmt(binom::midpoint_series(*s, ctx.config())));
    });
  }
  {
    struct Opts {
      double x = 0;
      std::string intervals;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("path", "interval family -> directed path");
    c->add_option("--x", o->x, "total vertical budget / interval universe length")->required();
    c->add_option("--intervals", o->intervals, "a:b,c:d,... (may be empty)");
    c->callback([&ctx, o] {
      const auto path = binom::interval_family_to_path(parse_intervals(o->intervals), o->x);
      ctx.columns({"run", "direction", "time", "x", "y"});
      for (std::size_t i = 0; i < path.pattern.size(); ++i)
        ctx.row({std::to_string(i + 1), std::to_string(path.pattern[i]), fmt(path.times[i]),
                 fmt(path.bends[i + 1][0]), fmt(path.bends[i + 1][1])});
    });
  }
}

void add_dist(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("dist", "the induced probability distributions");
  sub->require_subcommand(1);

  {
    struct Opts {
      double x = 0, from = 0, to = 0;
      int points = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("density", "centered density d_x on a uniform grid");
    c->add_option("--x", o->x)->required();
    c->add_option("--from", o->from)->required();
    c->add_option("--to", o->to)->required();
    c->add_option("--points", o->points)->required();
    c->callback([&ctx, o] {
      if (o->points < 1) throw domain_error("density: require points >= 1");
      ctx.tol_meta();
      ctx.columns({"s", "d_x(s)"});
      for (int i = 0; i < o->points; ++i) {
        const double s =
            o->points == 1
                ? o->from
                : o->from + (o->to - o->from) * static_cast<double>(i) / (o->points - 1);
        ctx.row({fmt(s), fmt(dist::density(o->x, s, ctx.config()))});
      }
    });
  }
  {
    struct Opts {
      double x = 0, p = 0.5;
      std::string method = "quadrature";
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("normalizer", "b_p(x), three independent routes");
    c->add_option("--x", o->x)->required();
    c->add_option("--p", o->p, "success weight, 0 < p < 1");
    c->add_option("--method", o->method, "quadrature | series | bessel")
        ->check(CLI::IsMember({"quadrature", "series", "bessel"}));
    c->callback([&ctx, o] {
      ctx.tol_meta();
      ctx.meta("method", o->method);
      double v;
      if (o->method == "series")
        v = dist::normalizer_series(o->x, o->p, ctx.config());
      else if (o->method == "bessel")
        v = dist::normalizer_bessel(o->x, o->p, ctx.config());
      else
        v = dist::normalizer(o->x, o->p, ctx.config());
      ctx.single("value", fmt(v));
    });
  }
  {
    struct Opts {
      double x = 0, p = 0.5;
      unsigned l = 1;
      bool raw = false, centered = false;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("moments", "moments of the induced distribution");
    c->add_option("--x", o->x)->required();
    c->add_option("--p", o->p, "success weight (ignored with --raw/--centered)");
    c->add_option("--l", o->l, "moment order")->required();
    auto* raw = c->add_flag("--raw", o->raw, "unnormalized integral moment at p = 1/2");
    auto* cen = c->add_flag("--centered", o->centered, "moment of the centered density");
    raw->excludes(cen);
    cen->excludes(raw);
    c->callback([&ctx, o] {
      ctx.tol_meta();
      double v;
      if (o->raw)
        v = dist::moment_integral(o->x, o->l, ctx.config());
      else if (o->centered)
        v = dist::centered_moment(o->x, o->l, ctx.config());
      else
        v = dist::moment_p(o->x, o->p, o->l, ctx.config());
      ctx.single("value", fmt(v));
    });
  }
  {
    struct Opts {
      double x = 0;
      std::int64_t n = 0;
      std::uint64_t seed = 12345;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("sample", "draws from the centered density");
    c->add_option("--x", o->x)->required();
    c->add_option("--n", o->n, "number of draws")->required();
    c->add_option("--seed", o->seed, "RNG seed");
    c->callback([&ctx, o] {
      ctx.tol_meta();
      ctx.columns({"t"});
      for (double t : dist::sample(o->x, o->n, o->seed, ctx.config())) ctx.row({fmt(t)});
    });
  }
  {
    auto xs = std::make_shared<std::string>();
    auto* c = sub->add_subcommand("delta", "integrals of cos against d_x along a sequence");
    c->add_option("--xs", *xs, "comma-separated x values")->required();
    c->callback([&ctx, xs] {
      ctx.tol_meta();
      ctx.meta("test_function", "cos");
      const auto x_list = parse_doubles(*xs);
      const auto vals = dist::delta_limit_check([](double t) { return std::cos(t); }, x_list,
                                                ctx.config());
      ctx.columns({"x", "integral"});
      for (std::size_t i = 0; i < x_list.size(); ++i)
        ctx.row({fmt(x_list[i]), fmt(vals[i])});
    });
  }
}

void add_catalan(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("catalan", "continuous Catalan function and its components");
  sub->require_subcommand(1);

  {
    struct Opts {
      double x = 0, y = 0;
      int nmax = 20;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("eval", "C(x,y) with an explicit tail bound");
    c->add_option("--x", o->x)->required();
    c->add_option("--y", o->y, "defaults to 0 (one-variable C(x))");
    c->add_option("--nmax", o->nmax, "truncation index");
    c->callback([&ctx, o] {
      const auto v = catalan::catalan_C(o->x, o->y, o->nmax);
      ctx.columns({"value", "tail_bound", "n_max"});
      ctx.row({fmt(v.value), fmt(v.tail_bound), std::to_string(v.n_max)});
    });
  }
  {
    struct Opts {
      int n = 0;
      double x = 0, y = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("lambda", "volume of the n-th component polytope");
    c->add_option("--n", o->n)->required();
    c->add_option("--x", o->x)->required();
    c->add_option("--y", o->y);
    c->callback([&ctx, o] {
      ctx.single("value", fmt(catalan::lambda_volume(o->n, o->x, o->y)));
    });
  }
  {
    auto mmax = std::make_shared<int>(0);
    auto* c = sub->add_subcommand("coeffs", "exact Taylor coefficients of C(2x)");
    c->add_option("--mmax", *mmax)->required();
    c->callback([&ctx, mmax] {
      ctx.columns({"m", "numerator", "denominator", "value"});
      const auto coeffs = catalan::catalan_series_coeffs(*mmax);
      for (std::size_t m = 0; m < coeffs.size(); ++m)
        ctx.row({std::to_string(m), coeffs[m].get_num().get_str(),
                 coeffs[m].get_den().get_str(), fmt(coeffs[m].get_d())});
    });
  }
  {
    struct Opts {
      int nmax = 0, mmax = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("table", "nonzero integer coefficients of the I_n polynomials");
    c->add_option("--nmax", o->nmax)->required();
    c->add_option("--mmax", o->mmax)->required();
    c->callback([&ctx, o] {
      const catalan::CoeffTable table(o->nmax, o->mmax);
      ctx.meta("entries", "nonzero only");
      ctx.columns({"n", "k", "l", "coeff"});
      for (int n = 0; n <= table.nmax(); ++n)
        for (int m = 0; m <= table.mmax(); ++m)
          for (int k = 0; k <= m; ++k) {
            const mpz_class& v = table.coeff(n, k, m - k);
            if (v != 0)
              ctx.row({std::to_string(n), std::to_string(k), std::to_string(m - k), fmt(v)});
          }
    });
  }
  {
    struct Opts {
      double x = 0, y = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = sub->add_subcommand("residual", "integral-equation self-consistency residual");
    c->add_option("--x", o->x)->required();
    c->add_option("--y", o->y);
    c->callback([&ctx, o] {
      ctx.single("value", fmt(catalan::integral_equation_residual(o->x, o->y)));
    });
  }
  {
    auto n = std::make_shared<int>(0);
    auto* c = sub->add_subcommand("narayana",
                                  "per-peak interior counts, closed form, and volumes");
    c->add_option("--n", *n, "semilength")->required();
    c->callback([&ctx, n] {
      ctx.columns({"ups", "interior_points", "narayana", "volume"});
      for (const auto& row : catalan::narayana_anchor(*n))
        ctx.row({std::to_string(row.ups), fmt(row.lattice_count), fmt(row.narayana),
                 fmt(row.volume)});
    });
  }
}

void add_verify(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("verify", "cross-check suite");
  sub->require_subcommand(1);
  auto fast = std::make_shared<bool>(false);
  auto* c = sub->add_subcommand("all", "run every cross-check and print a pass/fail table");
  c->add_flag("--fast", *fast, "shrink Monte Carlo sample counts");
  c->callback([&ctx, fast] {
    const auto results = contpath::verify::run_all(*fast);
    ctx.columns({"id", "name", "status", "worst", "detail"});
    bool all_pass = true;
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      ctx.row({std::to_string(r.id), r.name, r.pass ? "PASS" : "FAIL", fmt(r.worst), r.detail});
    }
    if (!all_pass) ctx.exit_code = 3;
  });
}

void add_commands(CLI::App& app, Context& ctx) {
  auto* c = app.add_subcommand("commands",
                               "the operation -> subcommand table (one row per operation)");
  c->callback([&ctx] {
    ctx.columns({"op", "invocation"});
    for (const auto& entry : command_table()) ctx.row({entry.first, entry.second});
  });
}

void record_params(CLI::App& app, Record& rec) {
  CLI::App* cur = &app;
  while (true) {
    const auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
  }
  for (const CLI::Option* o : cur->get_options()) {
    if (o->count() == 0) continue;
    std::string name = o->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    if (name.empty() || name == "help") continue;
    const auto& res = o->results();
    std::string val;
    if (res.empty()) {
      val = "true";
    } else {
      for (std::size_t i = 0; i < res.size(); ++i) val += (i ? "," : "") + res[i];
    }
    rec.params.emplace_back(name, val);
  }
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  CLI::App app{"continuous binomial coefficients and Catalan numbers: evaluators, "
               "discrete anchors, and cross-checks"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "csv (default) | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", ctx.tol, "relative tolerance for series and quadrature");

  add_specfn(app, ctx);
  add_lattice(app, ctx);
  add_oracle(app, ctx);
  add_binom(app, ctx);
  add_dist(app, ctx);
  add_catalan(app, ctx);
  add_verify(app, ctx);
  add_commands(app, ctx);

  for (int i = 1; i < argc; ++i) {
    if (i > 1) ctx.rec.command += ' ';
    ctx.rec.command += argv[i];
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const convergence_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  record_params(app, ctx.rec);
  print_record(ctx);
  return ctx.exit_code;
}
