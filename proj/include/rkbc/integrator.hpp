// Explicit RK time stepping in alpha/beta form,
//
//   U^(i) = sum_{k<i} alpha_ik U^(k) + dt beta_ik L(U^(k))   (beta_ik >= 0)
//   U^(i) = sum_{k<i} alpha_ik U^(k) + dt beta_ik Lt(U^(k))  (beta_ik <  0)
//
// with ghost values rebuilt at every stage by the boundary driver.
#pragma once

#include "rkbc/boundary.hpp"
#include "rkbc/flux.hpp"
#include "rkbc/grid.hpp"
#include "rkbc/problem.hpp"
#include "rkbc/tableau.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace rkbc {

enum class DtRule { cfl, dx_power };

struct StepConfig {
  DtRule rule = DtRule::cfl;
  double cfl = 0.6;
  double dt_power = 1.0;        // dt = dt_coefficient * dx^dt_power
  double dt_coefficient = 1.0;
  double t_final = 1.0;
  ReconstructionConfig reconstruction;
  BoundaryOptions boundary;
  int threads = 1;
  double blowup_threshold = 1e8;

  static StepConfig with_cfl(double cfl, double t_final) {
    StepConfig c;
    c.rule = DtRule::cfl;
    c.cfl = cfl;
    c.t_final = t_final;
    return c;
  }
  static StepConfig with_dx_power(double power, double coefficient, double t_final) {
    StepConfig c;
    c.rule = DtRule::dx_power;
    c.dt_power = power;
    c.dt_coefficient = coefficient;
    c.t_final = t_final;
    return c;
  }

  void validate() const {
    reconstruction.validate();
    if (rule == DtRule::cfl && !(cfl > 0.0)) throw InvalidArgument("CFL number must be positive");
    if (rule == DtRule::dx_power && !(dt_coefficient > 0.0))
      throw InvalidArgument("time-step coefficient must be positive");
    if (!(t_final > 0.0)) throw InvalidArgument("final time must be positive");
    if (threads < 1) throw InvalidArgument("thread count must be positive");
  }

  /// Unclamped step for spacing dx and global speed alpha.
  double step_size(double dx, double alpha) const {
    return rule == DtRule::cfl ? cfl * dx / alpha : dt_coefficient * std::pow(dx, dt_power);
  }
};

/// One operator evaluation inside a step: stage `stage` consumed L or Lt of
/// stage `source`.
struct OperatorCall {
  int stage;
  int source;
  Bias bias;

  bool operator==(const OperatorCall&) const = default;
};

template <int M>
struct IntegrationReport {
  int steps = 0;
  double final_time = 0.0;
  std::vector<double> alpha;  // per step
  State<M> min = State<M>::Constant(std::numeric_limits<double>::infinity());
  State<M> max = State<M>::Constant(-std::numeric_limits<double>::infinity());
};

template <int M>
class Stepper {
 public:
  /// Called after the ghosts of each stage have been filled.
  using StageObserver = std::function<void(int stage, const Field<M>&)>;

  Stepper(const ProblemDefinition<M>& problem, const Grid1D& grid, const RKTableau& tableau, const StepConfig& cfg)
      : problem_(&problem),
        tableau_(tableau),
        cfg_(cfg),
        op_(problem, cfg.reconstruction, cfg.threads),
        bc_(problem, grid, cfg.reconstruction, cfg.boundary),
        stages_(tableau.stages + 1, Field<M>(grid)),
        upwind_(tableau.stages),
        downwind_(tableau.stages) {
    cfg_.validate();
    if (grid.ghosts() < cfg.reconstruction.ghosts())
      throw InvalidArgument("grid has fewer ghost points than the reconstruction needs");
  }

  const BoundaryDriver<M>& boundary() const { return bc_; }
  const StepConfig& config() const { return cfg_; }

  void set_observer(StageObserver obs) { observer_ = std::move(obs); }
  void set_trace(std::vector<OperatorCall>* trace) { trace_ = trace; }

  /// Advances u from t_n by dt with the given global speed.
  void step(Field<M>& u, double t_n, double dt, double alpha) {
    if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");
    const int s = tableau_.stages;
    const int n = u.size();
    stages_[0] = u;
    fill(0, t_n, dt);
    for (int k = 0; k < s; ++k) {
      upwind_[k].reset();
      downwind_[k].reset();
    }

    for (int i = 1; i <= s; ++i) {
      auto& ui = stages_[i];
      for (int j = 0; j < n; ++j) ui[j].setZero();
      for (int k = 0; k < i; ++k) {
        const double a = tableau_.a(i, k);
        const double b = tableau_.b(i, k);
        if (a != 0.0)
          for (int j = 0; j < n; ++j) ui[j] += a * stages_[k][j];
        if (b == 0.0) continue;
        const Bias bias = b > 0.0 ? Bias::upwind : Bias::downwind;
        const auto& lk = operator_of(k, alpha, bias);
        if (trace_) trace_->push_back({i, k, bias});
        for (int j = 0; j < n; ++j) ui[j] += (dt * b) * lk[j];
      }
      if (i < s) fill(i, t_n, dt);
    }
    for (int j = 0; j < n; ++j) u[j] = stages_[s][j];
  }

 private:
  void fill(int stage, double t_n, double dt) {
    bc_.apply(stages_[stage], tableau_, stage, t_n, dt);
    if (observer_) observer_(stage, stages_[stage]);
  }

  const std::vector<State<M>>& operator_of(int k, double alpha, Bias bias) {
    auto& slot = bias == Bias::upwind ? upwind_[k] : downwind_[k];
    if (!slot) {
      slot.emplace(stages_[k].size());
      op_.apply(stages_[k], alpha, bias, *slot);
    }
    return *slot;
  }

  const ProblemDefinition<M>* problem_;
  RKTableau tableau_;
  StepConfig cfg_;
  SpatialOperator<M> op_;
  BoundaryDriver<M> bc_;
  std::vector<Field<M>> stages_;
  std::vector<std::optional<std::vector<State<M>>>> upwind_, downwind_;
  StageObserver observer_;
  std::vector<OperatorCall>* trace_ = nullptr;
};

/// Single step with a fresh stepper; convenient for tests.
template <int M>
Field<M> rk_step(const Field<M>& u, const ProblemDefinition<M>& problem, const RKTableau& tableau, double t_n,
                 double dt, const StepConfig& cfg, std::vector<OperatorCall>* trace = nullptr) {
  Stepper<M> stepper(problem, u.grid(), tableau, cfg);
  stepper.set_trace(trace);
  Field<M> out = u;
  stepper.step(out, t_n, dt, global_alpha(u, problem));
  return out;
}

template <int M>
void check_finite(const Field<M>& u, double t, double threshold) {
  for (int j = 0; j < u.size(); ++j) {
    const auto& v = u[j];
    if (!v.allFinite() || v.cwiseAbs().maxCoeff() > threshold) throw BlowupError(t, u.grid().x(j));
  }
}

/// Steps u from t = 0 to cfg.t_final; the last step is shortened to land
/// exactly on t_final.
template <int M>
IntegrationReport<M> integrate(Field<M>& u, const ProblemDefinition<M>& problem, const RKTableau& tableau,
                               const StepConfig& cfg, typename Stepper<M>::StageObserver observer = {}) {
  Stepper<M> stepper(problem, u.grid(), tableau, cfg);
  if (observer) stepper.set_observer(std::move(observer));
  IntegrationReport<M> report;
  const double dx = u.grid().dx();
  double t = 0.0;
  while (t < cfg.t_final) {
    double alpha;
    try {
      alpha = global_alpha(u, problem);
    } catch (const HyperbolicityError& e) {
      throw BlowupError(t, e.location());
    }
    double dt = cfg.step_size(dx, alpha);
    bool last = false;
    if (t + dt >= cfg.t_final) {
      dt = cfg.t_final - t;
      last = true;
    }
    try {
      stepper.step(u, t, dt, alpha);
    } catch (const HyperbolicityError& e) {
      throw BlowupError(t, e.location());
    }
    t = last ? cfg.t_final : t + dt;
    check_finite(u, t, cfg.blowup_threshold);
    report.alpha.push_back(alpha);
    ++report.steps;
  }
  report.final_time = t;
  for (const auto& v : u.interior()) {
    report.min = report.min.cwiseMin(v);
    report.max = report.max.cwiseMax(v);
  }
  return report;
}

}  // namespace rkbc
