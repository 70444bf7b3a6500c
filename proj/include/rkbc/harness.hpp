// Experiment driver: single runs, refinement ladders, CFL sweeps and
// boundary-method comparisons, with CSV output.
#pragma once

#include "rkbc/integrator.hpp"
#include "rkbc/parallel.hpp"
#include "rkbc/problems.hpp"
#include "rkbc/solver2d.hpp"
#include "rkbc/tableau.hpp"
#include "rkbc/vortex2d.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rkbc {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};

/// L1 is the mean absolute error over points (a grid-weighted integral
/// divided by the domain measure), averaged over components; Linf is the
/// maximum over points and components. component >= 0 restricts both to a
/// single component.
template <int M>
ErrorNorms error_norms(std::span<const State<M>> numerical, std::span<const State<M>> exact, int component = -1) {
  if (numerical.size() != exact.size()) throw InvalidArgument("error_norms: size mismatch");
  ErrorNorms e;
  if (numerical.empty()) return e;
  double sum = 0.0;
  for (std::size_t j = 0; j < numerical.size(); ++j) {
    const State<M> d = (numerical[j] - exact[j]).cwiseAbs();
    if (component >= 0) {
      sum += d(component);
      e.linf = std::max(e.linf, d(component));
    } else {
      sum += d.sum();
      e.linf = std::max(e.linf, d.maxCoeff());
    }
  }
  const double count = static_cast<double>(numerical.size()) * (component >= 0 ? 1 : M);
  e.l1 = sum / count;
  return e;
}

template <int M>
ErrorNorms error_norms(const Field<M>& u, const std::function<State<M>(double)>& exact, int component = -1) {
  std::vector<State<M>> ref(u.size());
  for (int j = 0; j < u.size(); ++j) ref[j] = exact(u.grid().x(j));
  return error_norms<M>(u.interior(), ref, component);
}

/// ln(e_coarse / e_fine) / ln(r); NaN when either error is not positive.
inline double convergence_order(double e_coarse, double e_fine, double r) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0) || !(r > 1.0)) return kNaN;
  return std::log(e_coarse / e_fine) / std::log(r);
}

// ---------------------------------------------------------------------------
// Run specification and records

struct RunSpec {
  std::string problem = "advect-smooth";
  std::string scheme = "ssp33";
  BoundaryMethod boundary = BoundaryMethod::rk_stage;
  std::optional<Extrapolation> extrapolation;
  int taylor_depth = 0;
  std::string weno = "5";  // 5 | 5-ideal | 7-ideal
  int nx = 80;              // interior points per direction
  DtRule rule = DtRule::cfl;
  double cfl = 0.6;
  double dt_power = 1.0;
  double dt_coefficient = 1.0;
  double t_final = 1.0;
  int threads = 1;
};

struct RunRecord {
  std::string problem;
  std::string scheme;
  std::string boundary;
  std::string weno;
  double dx = kNaN;
  std::string dt_rule;
  double cfl = kNaN;
  double t_final = kNaN;
  double l1 = kNaN;
  double linf = kNaN;
  double order_l1 = kNaN;
  double order_linf = kNaN;
  int steps = 0;
  double wall_ms = 0.0;
  bool blowup = false;
};

inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {"problem", "scheme",  "boundary", "weno",       "dx",
                                                "dt_rule", "cfl",     "t_final",  "l1",         "linf",
                                                "order_l1", "order_linf", "steps", "wall_ms", "blowup"};
  return cols;
}

struct RunReport {
  std::vector<RunRecord> records;

  bool empty() const { return records.empty(); }
  std::size_t size() const { return records.size(); }
};

namespace detail {

inline std::string fmt_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline double parse_double(const std::string& s) {
  if (s.empty()) return kNaN;
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw InvalidArgument("malformed number '" + s + "' in CSV");
  return v;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline void write_csv(std::ostream& os, const RunReport& report) {
  const auto& cols = csv_columns();
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << '\n';
  for (const auto& r : report.records) {
    os << r.problem << ',' << r.scheme << ',' << r.boundary << ',' << r.weno << ',' << detail::fmt_double(r.dx) << ','
       << r.dt_rule << ',' << detail::fmt_double(r.cfl) << ',' << detail::fmt_double(r.t_final) << ','
       << detail::fmt_double(r.l1) << ',' << detail::fmt_double(r.linf) << ',' << detail::fmt_double(r.order_l1)
       << ',' << detail::fmt_double(r.order_linf) << ',' << r.steps << ',' << detail::fmt_double(r.wall_ms) << ','
       << (r.blowup ? 1 : 0) << '\n';
  }
}

inline RunReport read_csv(std::istream& is) {
  RunReport report;
  std::string line;
  if (!std::getline(is, line)) return report;
  if (detail::split_csv_line(line) != csv_columns()) throw InvalidArgument("unexpected CSV header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != csv_columns().size()) throw InvalidArgument("wrong number of CSV fields");
    RunRecord r;
    r.problem = f[0];
    r.scheme = f[1];
    r.boundary = f[2];
    r.weno = f[3];
    r.dx = detail::parse_double(f[4]);
    r.dt_rule = f[5];
    r.cfl = detail::parse_double(f[6]);
    r.t_final = detail::parse_double(f[7]);
    r.l1 = detail::parse_double(f[8]);
    r.linf = detail::parse_double(f[9]);
    r.order_l1 = detail::parse_double(f[10]);
    r.order_linf = detail::parse_double(f[11]);
    r.steps = std::stoi(f[12]);
    r.wall_ms = detail::parse_double(f[13]);
    r.blowup = f[14] == "1";
    report.records.push_back(std::move(r));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Problem registry

inline const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = {"advect-smooth", "advect-step", "burgers",
                                                 "euler-smooth",  "blast",       "vortex2d"};
  return names;
}

inline double default_final_time(const std::string& problem) {
  if (problem == "advect-smooth" || problem == "advect-step" || problem == "vortex2d") return 1.0;
  if (problem == "burgers") return 0.4;
  if (problem == "euler-smooth") return 2.0;
  if (problem == "blast") return 0.038;
  throw InvalidArgument("unknown problem '" + problem + "'");
}

/// Domain length of a problem (per direction in 2D).
inline double domain_length(const std::string& problem) {
  if (problem == "advect-smooth" || problem == "advect-step" || problem == "burgers") return 2.0;
  if (problem == "euler-smooth") return 2.0 * std::numbers::pi;
  if (problem == "blast") return 1.0;
  if (problem == "vortex2d") return 1.5;
  throw InvalidArgument("unknown problem '" + problem + "'");
}

/// Interior point count for spacing dx.
inline int points_for_dx(const std::string& problem, double dx) {
  const int n = static_cast<int>(std::lround(domain_length(problem) / dx));
  if (n < 1) throw InvalidArgument("grid spacing too large for the domain");
  return n;
}

inline ReconstructionConfig parse_weno(const std::string& s) {
  ReconstructionConfig cfg;
  if (s == "5") {
    cfg.order = 5;
    cfg.weights = WeightMode::nonlinear;
  } else if (s == "5-ideal") {
    cfg.order = 5;
    cfg.weights = WeightMode::ideal;
  } else if (s == "7-ideal" || s == "7") {
    cfg.order = 7;
    cfg.weights = WeightMode::ideal;
  } else {
    throw InvalidArgument("unknown WENO variant '" + s + "' (expected 5 or 7-ideal)");
  }
  return cfg;
}

inline BoundaryMethod parse_boundary_method(const std::string& s) {
  if (s == "rk-stage") return BoundaryMethod::rk_stage;
  if (s == "tan-shu") return BoundaryMethod::tan_shu;
  throw InvalidArgument("unknown boundary method '" + s + "' (expected rk-stage or tan-shu)");
}

inline Extrapolation parse_extrapolation(const std::string& s) {
  if (s == "lagrange") return Extrapolation::lagrange;
  if (s == "weno") return Extrapolation::weno;
  throw InvalidArgument("unknown extrapolation '" + s + "' (expected lagrange or weno)");
}

inline std::string dt_rule_string(const RunSpec& spec) {
  if (spec.rule == DtRule::cfl) return "cfl";
  return "dx_power:" + detail::fmt_double(spec.dt_power) + ":" + detail::fmt_double(spec.dt_coefficient);
}

inline StepConfig step_config(const RunSpec& spec) {
  StepConfig cfg = spec.rule == DtRule::cfl ? StepConfig::with_cfl(spec.cfl, spec.t_final)
                                            : StepConfig::with_dx_power(spec.dt_power, spec.dt_coefficient, spec.t_final);
  cfg.reconstruction = parse_weno(spec.weno);
  cfg.boundary.method = spec.boundary;
  cfg.boundary.extrapolation = spec.extrapolation;
  cfg.boundary.taylor_depth = spec.taylor_depth;
  cfg.threads = spec.threads;
  return cfg;
}

/// Final solution of a run: interior coordinates and states (2D: row-major,
/// x fastest, with y stored alongside).
struct RunOutcome {
  RunRecord record;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<DynVector> values;
};

namespace detail {

template <int M>
RunOutcome run_1d(const ProblemDefinition<M>& problem, const RunSpec& spec) {
  RunOutcome out;
  auto& rec = out.record;
  const StepConfig cfg = step_config(spec);
  const Grid1D grid(problem.a, problem.b, spec.nx, cfg.reconstruction.ghosts());
  rec.dx = grid.dx();
  Field<M> u(grid);
  for (int j = 0; j < grid.size(); ++j) u[j] = problem.initial(grid.x(j));
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto rep = integrate(u, problem, builtin_tableau(spec.scheme), cfg);
    rec.steps = rep.steps;
  } catch (const BlowupError&) {
    rec.blowup = true;
  } catch (const SolveError&) {
    rec.blowup = true;
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!rec.blowup) {
    if (problem.has_exact()) {
      const auto e = error_norms<M>(u, [&](double x) { return problem.exact(spec.t_final, x); });
      rec.l1 = e.l1;
      rec.linf = e.linf;
    }
    for (int j = 0; j < grid.size(); ++j) {
      out.x.push_back(grid.x(j));
      out.values.emplace_back(DynVector(u[j]));
    }
  }
  return out;
}

inline RunOutcome run_2d(const Problem2D<4>& problem, const RunSpec& spec) {
  RunOutcome out;
  auto& rec = out.record;
  const StepConfig cfg = step_config(spec);
  const Grid1D grid(problem.a, problem.b, spec.nx, cfg.reconstruction.ghosts());
  rec.dx = grid.dx();
  Field2D<4> u(grid, grid);
  for (int j = 0; j < grid.size(); ++j)
    for (int i = 0; i < grid.size(); ++i) u(i, j) = problem.initial(grid.x(i), grid.x(j));
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto rep = integrate_2d(u, problem, builtin_tableau(spec.scheme), cfg);
    rec.steps = rep.steps;
  } catch (const BlowupError&) {
    rec.blowup = true;
  } catch (const SolveError&) {
    rec.blowup = true;
  }
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!rec.blowup) {
    std::vector<State<4>> num, ref;
    for (int j = 0; j < grid.size(); ++j)
      for (int i = 0; i < grid.size(); ++i) {
        num.push_back(u(i, j));
        ref.push_back(problem.exact(spec.t_final, grid.x(i), grid.x(j)));
        out.x.push_back(grid.x(i));
        out.y.push_back(grid.x(j));
        out.values.emplace_back(DynVector(u(i, j)));
      }
    const auto e = error_norms<4>(num, ref);
    rec.l1 = e.l1;
    rec.linf = e.linf;
  }
  return out;
}

}  // namespace detail

/// Executes one run. Blowups (non-finite values, loss of hyperbolicity, or a
/// failed boundary solve) are recorded in the record rather than thrown.
inline RunOutcome run_single(const RunSpec& spec) {
  RunOutcome out;
  const auto& p = spec.problem;
  if (p == "advect-smooth") out = detail::run_1d(make_linear_advection(AdvectionVariant::smooth), spec);
  else if (p == "advect-step") out = detail::run_1d(make_linear_advection(AdvectionVariant::step), spec);
  else if (p == "burgers") out = detail::run_1d(make_burgers(), spec);
  else if (p == "euler-smooth") out = detail::run_1d(make_euler_smooth(), spec);
  else if (p == "blast") out = detail::run_1d(make_blast_wave(), spec);
  else if (p == "vortex2d") out = detail::run_2d(make_euler2d_vortex(1.0), spec);
  else throw InvalidArgument("unknown problem '" + p + "'");

  auto& r = out.record;
  r.problem = p;
  r.scheme = scheme_id(builtin_tableau(spec.scheme));
  r.boundary = to_string(spec.boundary);
  r.weno = spec.weno;
  r.dt_rule = dt_rule_string(spec);
  r.cfl = spec.rule == DtRule::cfl ? spec.cfl : kNaN;
  r.t_final = spec.t_final;
  return out;
}

/// Fills order columns between consecutive records of one ladder.
inline void compute_orders(std::vector<RunRecord>& ladder) {
  for (std::size_t k = 1; k < ladder.size(); ++k) {
    const double r = ladder[k - 1].dx / ladder[k].dx;
    ladder[k].order_l1 = convergence_order(ladder[k - 1].l1, ladder[k].l1, r);
    ladder[k].order_linf = convergence_order(ladder[k - 1].linf, ladder[k].linf, r);
  }
}

/// Runs every spec, `threads` at a time; results keep the input order.
inline std::vector<RunRecord> run_batch(const std::vector<RunSpec>& specs, int threads) {
  std::vector<RunRecord> out(specs.size());
  parallel_for(0, static_cast<int>(specs.size()), threads,
               [&](int k) { out[k] = run_single(specs[k]).record; });
  return out;
}

/// Refinement ladder over interior point counts (coarse to fine).
inline RunReport run_convergence_study(const RunSpec& base, const std::vector<int>& nx_list, int threads = 1) {
  std::vector<RunSpec> specs;
  for (int n : nx_list) {
    RunSpec s = base;
    s.nx = n;
    specs.push_back(s);
  }
  RunReport report;
  report.records = run_batch(specs, threads);
  compute_orders(report.records);
  return report;
}

/// Paired ladders with both boundary methods (SSP(3,3) only).
inline RunReport run_comparison(const RunSpec& base, const std::vector<int>& nx_list, int threads = 1) {
  RunReport report;
  for (auto method : {BoundaryMethod::rk_stage, BoundaryMethod::tan_shu}) {
    RunSpec s = base;
    s.boundary = method;
    auto ladder = run_convergence_study(s, nx_list, threads);
    report.records.insert(report.records.end(), ladder.records.begin(), ladder.records.end());
  }
  return report;
}

inline RunReport run_cfl_sweep(const RunSpec& base, const std::vector<std::string>& schemes,
                               const std::vector<double>& cfl_grid, int threads = 1) {
  std::vector<RunSpec> specs;
  for (const auto& scheme : schemes)
    for (double c : cfl_grid) {
      RunSpec s = base;
      s.scheme = scheme;
      s.rule = DtRule::cfl;
      s.cfl = c;
      specs.push_back(s);
    }
  RunReport report;
  report.records = run_batch(specs, threads);
  return report;
}

/// Critical CFL of one scheme in a sweep: scanning CFL upward, the last value
/// before the first run whose L1 error exceeds `factor` times the error at
/// the baseline CFL (or that blew up). NaN if the baseline itself failed.
inline double critical_cfl(const RunReport& sweep, const std::string& scheme, double baseline_cfl = 0.3,
                           double factor = 10.0) {
  const std::string id = scheme_id(builtin_tableau(scheme));
  std::vector<const RunRecord*> rows;
  for (const auto& r : sweep.records)
    if (r.scheme == id) rows.push_back(&r);
  std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->cfl < b->cfl; });
  const RunRecord* base = nullptr;
  for (auto* r : rows)
    if (!base || std::abs(r->cfl - baseline_cfl) < std::abs(base->cfl - baseline_cfl)) base = r;
  if (!base || base->blowup || !(base->l1 >= 0.0)) return kNaN;
  const double limit = factor * base->l1;
  double critical = kNaN;
  for (auto* r : rows) {
    if (r->cfl < base->cfl) continue;
    if (r->blowup || !(r->l1 <= limit)) break;
    critical = r->cfl;
  }
  return critical;
}

}  // namespace rkbc
