// Command-line front end: single runs, refinement ladders, CFL sweeps and
// boundary-method comparisons, written as CSV.
#include "rkbc/rkbc.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

struct Options {
  std::string problem = "advect-smooth";
  std::vector<std::string> schemes = {"ssp33"};
  std::string boundary = "rk-stage";
  std::string extrapolation;
  int taylor_depth = 0;
  std::string weno = "5";
  std::vector<int> nx = {80};
  std::vector<double> cfl = {0.6};
  std::vector<double> dt_power;
  double t_final = -1.0;
  std::string out;
  int threads = 1;
  int jobs = 1;
  std::vector<double> expect_order;
  bool expect_stabler = false;
};

rkbc::RunSpec base_spec(const Options& o) {
  rkbc::RunSpec s;
  s.problem = o.problem;
  s.scheme = o.schemes.front();
  s.boundary = rkbc::parse_boundary_method(o.boundary);
  if (!o.extrapolation.empty()) s.extrapolation = rkbc::parse_extrapolation(o.extrapolation);
  s.taylor_depth = o.taylor_depth;
  s.weno = o.weno;
  rkbc::parse_weno(o.weno);
  s.nx = o.nx.front();
  if (!o.dt_power.empty()) {
    if (o.dt_power.size() != 2) throw rkbc::InvalidArgument("--dt-power takes P C");
    s.rule = rkbc::DtRule::dx_power;
    s.dt_power = o.dt_power[0];
    s.dt_coefficient = o.dt_power[1];
  } else {
    s.rule = rkbc::DtRule::cfl;
    s.cfl = o.cfl.front();
  }
  s.t_final = o.t_final > 0.0 ? o.t_final : rkbc::default_final_time(o.problem);
  s.threads = o.threads;
  return s;
}

void emit(const rkbc::RunReport& report, const std::string& path) {
  if (path.empty() || path == "-") {
    rkbc::write_csv(std::cout, report);
    return;
  }
  std::ofstream f(path);
  if (!f) throw rkbc::InvalidArgument("cannot open '" + path + "' for writing");
  rkbc::write_csv(f, report);
}

// Final-pair L1 order of each ladder (records sharing scheme and boundary).
bool check_orders(const rkbc::RunReport& report, const std::vector<double>& range) {
  if (range.empty()) return true;
  bool ok = true;
  for (std::size_t k = 0; k < report.size(); ++k) {
    const auto& r = report.records[k];
    const bool last = k + 1 == report.size() || report.records[k + 1].scheme != r.scheme ||
                      report.records[k + 1].boundary != r.boundary;
    if (!last || k == 0) continue;
    const bool pass = r.order_l1 >= range[0] && r.order_l1 <= range[1];
    std::fprintf(stderr, "%s %s %s final order %.3f in [%g, %g]\n", pass ? "PASS" : "FAIL", r.scheme.c_str(),
                 r.boundary.c_str(), r.order_l1, range[0], range[1]);
    ok = ok && pass;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order RK boundary treatment experiments"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file using the long flag names");
  app.get_config_formatter_base()->arrayDelimiter(' ');

  Options o;
  app.add_option("--problem", o.problem, "advect-smooth | advect-step | burgers | euler-smooth | blast | vortex2d")
      ->check(CLI::IsMember(rkbc::problem_names()));
  app.add_option("--scheme", o.schemes, "RK scheme(s): ssp33 ssp33s ssp54 ssp54s")->expected(1, -1);
  app.add_option("--boundary", o.boundary, "rk-stage | tan-shu")->check(CLI::IsMember({"rk-stage", "tan-shu"}));
  app.add_option("--extrapolation", o.extrapolation, "lagrange | weno (default by problem smoothness)")
      ->check(CLI::IsMember({"lagrange", "weno"}));
  app.add_option("--taylor-depth", o.taylor_depth, "Ghost Taylor depth (0 = spatial order)")->check(CLI::NonNegativeNumber);
  app.add_option("--weno", o.weno, "5 | 7-ideal")->check(CLI::IsMember({"5", "5-ideal", "7-ideal"}));
  app.add_option("--nx", o.nx, "Interior points per direction (list for converge/compare)")
      ->expected(1, -1)
      ->check(CLI::PositiveNumber);
  app.add_option("--cfl", o.cfl, "CFL number (list for cfl-sweep)")->expected(1, -1)->check(CLI::PositiveNumber);
  app.add_option("--dt-power", o.dt_power, "Use dt = C dx^P")->expected(2);
  app.add_option("--tfinal", o.t_final, "Final time (default by problem)");
  app.add_option("--out", o.out, "CSV output file (default stdout)");
  app.add_option("--threads", o.threads, "Threads per run")->check(CLI::PositiveNumber);
  app.add_option("--jobs", o.jobs, "Runs executed concurrently")->check(CLI::PositiveNumber);
  app.add_option("--expect-order", o.expect_order, "Regression: final-pair L1 order range LO HI")->expected(2);
  app.add_flag("--expect-stabler", o.expect_stabler,
               "Regression: starred schemes have a larger critical CFL than their unstarred partners");

  auto* run = app.add_subcommand("run", "Single run");
  auto* converge = app.add_subcommand("converge", "Refinement ladder over --nx");
  auto* sweep = app.add_subcommand("cfl-sweep", "L1 error against CFL for each --scheme");
  auto* compare = app.add_subcommand("compare", "rk-stage and tan-shu ladders side by side");
  for (auto* sub : {run, converge, sweep, compare}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& sc : o.schemes) sc = rkbc::scheme_id(rkbc::builtin_tableau(sc));
    const rkbc::RunSpec base = base_spec(o);
    rkbc::RunReport report;
    bool ok = true;

    if (*run) {
      std::vector<rkbc::RunSpec> specs;
      for (const auto& sc : o.schemes) {
        auto s = base;
        s.scheme = sc;
        specs.push_back(s);
      }
      report.records = rkbc::run_batch(specs, o.jobs);
    } else if (*converge) {
      for (const auto& sc : o.schemes) {
        auto s = base;
        s.scheme = sc;
        const auto ladder = rkbc::run_convergence_study(s, o.nx, o.jobs);
        report.records.insert(report.records.end(), ladder.records.begin(), ladder.records.end());
      }
      ok = check_orders(report, o.expect_order);
    } else if (*compare) {
      report = rkbc::run_comparison(base, o.nx, o.jobs);
      ok = check_orders(report, o.expect_order);
    } else if (*sweep) {
      report = rkbc::run_cfl_sweep(base, o.schemes, o.cfl, o.jobs);
      for (const auto& sc : o.schemes)
        std::fprintf(stderr, "critical CFL %s: %g\n", sc.c_str(), rkbc::critical_cfl(report, sc));
      if (o.expect_stabler) {
        for (const auto& sc : o.schemes) {
          if (sc.empty() || sc.back() == 's') continue;
          const std::string starred = sc + "s";
          if (std::find(o.schemes.begin(), o.schemes.end(), starred) == o.schemes.end()) continue;
          const double a = rkbc::critical_cfl(report, sc), b = rkbc::critical_cfl(report, starred);
          const bool pass = b > a;
          std::fprintf(stderr, "%s critical CFL %s (%g) > %s (%g)\n", pass ? "PASS" : "FAIL", starred.c_str(), b,
                       sc.c_str(), a);
          ok = ok && pass;
        }
      }
    }
    emit(report, o.out);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
