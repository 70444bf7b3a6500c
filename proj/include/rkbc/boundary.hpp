// Inverse Lax-Wendroff boundary treatment with stage-consistent ghost values.
//
// Stage 0 (time level t_n):
//   outgoing characteristic variables V_m = l_m U are extrapolated to x_b;
//   U^(0) solves  l_m U = V_m*  (outgoing)  and  phi(U) = g(t)  (prescribed);
//   U^(1) solves  l_m U_x = V_m*'  and  phi_U A U_x = -g' - phi_U T0;
//   U^(k), k >= 2, is R V*^(k).
// Stage i >= 1 applies the RK stage itself to the boundary Taylor data:
//   U^(i),(0) = sum_k alpha_ik U^(k),(0) - beta_ik dt (A U^(k),(1) + T0_k)
//   U^(i),(1) = sum_k alpha_ik U^(k),(1)
//               - beta_ik dt (H[U^(k),(1), U^(k),(1)] + A U^(k),(2) + T1_k)
// with higher derivatives extrapolated from the stage field. T0/T1 carry the
// tangential flux derivative in 2D and vanish in 1D.
//
// The intermediate-boundary-condition variant instead repeats the stage-0
// procedure on each stage field with shifted data
//   g + c1 dt g' + c2 dt^2 g'',  (c1, c2) = (1, 0) and (1/2, 1/4).
//
// All derivative stacks are in the physical x direction. Sampling runs from
// the boundary inward, so on the right side d/dxi = -d/dx.
#pragma once

#include "rkbc/grid.hpp"
#include "rkbc/problem.hpp"
#include "rkbc/tableau.hpp"
#include "rkbc/weno.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace rkbc {

enum class BoundaryMethod { rk_stage, tan_shu };
enum class Extrapolation { lagrange, weno };

inline const char* to_string(BoundaryMethod m) { return m == BoundaryMethod::rk_stage ? "rk-stage" : "tan-shu"; }
inline const char* to_string(Extrapolation e) { return e == Extrapolation::lagrange ? "lagrange" : "weno"; }

struct BoundaryOptions {
  BoundaryMethod method = BoundaryMethod::rk_stage;
  std::optional<Extrapolation> extrapolation;  // default: lagrange if smooth
  int taylor_depth = 0;                        // 0: reconstruction order, or the nonsmooth depth
  double epsilon = 1e-6;
  double newton_tolerance = 1e-12;
  int newton_max_iterations = 50;
};

/// d[k] ~ d^k U / dx^k at the boundary point, k = 0..K-1.
template <int M>
struct BoundaryDerivatives {
  Side side = Side::left;
  int stage = 0;
  std::vector<State<M>> d;

  int depth() const { return static_cast<int>(d.size()); }
};

/// Tangential contribution to U_t at the boundary (2D), and its x-derivative.
template <int M>
struct TangentialSource {
  State<M> t0 = State<M>::Zero();
  State<M> t1 = State<M>::Zero();
};

inline int side_sign(Side side) { return side == Side::left ? 1 : -1; }

/// Maps K samples at xi = (i + 1/2) dx, i = 0..K-1, to xi-derivatives at xi = 0.
class Extrapolator {
 public:
  Extrapolator(int depth, double dx, Extrapolation mode, double eps = 1e-6)
      : k_(depth), dx_(dx), mode_(mode), eps_(eps) {
    if (depth < 1) throw InvalidArgument("extrapolation depth must be positive");
    if (mode == Extrapolation::lagrange) {
      weights_.assign(static_cast<std::size_t>(k_ * k_), 0.0);
      std::vector<double> unit(k_, 0.0);
      for (int i = 0; i < k_; ++i) {
        unit[i] = 1.0;
        const auto col = lagrange_boundary_derivatives(unit, 0.5 * dx, dx, 0.0);
        for (int k = 0; k < k_; ++k) weights_[k * k_ + i] = col[k];
        unit[i] = 0.0;
      }
    }
  }

  int depth() const { return k_; }
  double dx() const { return dx_; }
  Extrapolation mode() const { return mode_; }

  void apply(std::span<const double> values, std::span<double> out) const {
    if (mode_ == Extrapolation::weno) {
      const auto d = weno_boundary_derivatives(values, 0.5 * dx_, dx_, 0.0, eps_);
      std::copy(d.begin(), d.end(), out.begin());
      return;
    }
    for (int k = 0; k < k_; ++k) {
      double s = 0.0;
      for (int i = 0; i < k_; ++i) s += weights_[k * k_ + i] * values[i];
      out[k] = s;
    }
  }

 private:
  int k_;
  double dx_;
  Extrapolation mode_;
  double eps_;
  std::vector<double> weights_;  // k-major
};

/// Extrapolated characteristic derivatives at one boundary.
template <int M>
struct CharacteristicDerivatives {
  Side side = Side::left;
  Eigensystem<M> eig;             // at the interior point nearest the boundary
  std::array<int, M> by_inflow{};  // modes sorted by inward speed, ascending
  std::vector<State<M>> v;        // v[k](m) = d^k V_m / dx^k at x_b

  /// The n_out modes leaving the domain.
  std::span<const int> outgoing(int n_out) const { return std::span<const int>(by_inflow.data(), n_out); }
};

template <int M>
CharacteristicDerivatives<M> outgoing_char_derivatives(const Field<M>& field, const ProblemDefinition<M>& problem,
                                                       Side side, const Extrapolator& ex) {
  const int K = ex.depth();
  const int n = field.size();
  if (K > n) throw InvalidArgument("Taylor depth exceeds the number of interior points");
  const int s = side_sign(side);
  auto sample = [&](int i) -> const State<M>& { return side == Side::left ? field[i] : field[n - 1 - i]; };

  CharacteristicDerivatives<M> cd;
  cd.side = side;
  try {
    cd.eig = problem.eigensystem(sample(0));
  } catch (const HyperbolicityError& e) {
    throw HyperbolicityError(std::string(e.what()) + " next to the " + to_string(side) + " boundary",
                             side == Side::left ? field.grid().x(0) : field.grid().x(n - 1));
  }
  std::iota(cd.by_inflow.begin(), cd.by_inflow.end(), 0);
  std::stable_sort(cd.by_inflow.begin(), cd.by_inflow.end(),
                   [&](int i, int j) { return s * cd.eig.eigenvalues(i) < s * cd.eig.eigenvalues(j); });

  cd.v.assign(K, State<M>::Zero());
  std::vector<double> values(K), out(K);
  for (int m = 0; m < M; ++m) {
    for (int i = 0; i < K; ++i) values[i] = cd.eig.left.row(m).dot(sample(i));
    ex.apply(values, out);
    double sign = 1.0;
    for (int k = 0; k < K; ++k) {
      cd.v[k](m) = sign * out[k];
      sign *= s;
    }
  }
  return cd;
}

/// Newton solve of the outgoing rows and the p prescribed rows phi(U) = g.
template <int M>
State<M> solve_boundary_state(const CharacteristicDerivatives<M>& cd, const BoundaryCondition<M>& bc,
                              const DynVector& g, double tol = 1e-12, int max_iter = 50) {
  const int p = bc.rows;
  if (p < 0 || p > M) throw InvalidArgument("boundary condition rows out of range");
  const auto out = cd.outgoing(M - p);
  State<M> u = cd.eig.right * cd.v[0];
  State<M> rhs;
  for (int r = 0; r < M - p; ++r) rhs(r) = cd.v[0](out[r]);
  for (int r = 0; r < p; ++r) rhs(M - p + r) = g(r);

  double worst = 0.0;
  for (int it = 0; it <= max_iter; ++it) {
    State<M> res;
    Matrix<M> jac;
    for (int r = 0; r < M - p; ++r) jac.row(r) = cd.eig.left.row(out[r]);
    State<M> lhs;
    for (int r = 0; r < M - p; ++r) lhs(r) = jac.row(r).dot(u);
    if (p > 0) {
      const DynVector phi = bc.constraint(u);
      const DynMatrix dphi = bc.constraint_jacobian(u);
      for (int r = 0; r < p; ++r) {
        jac.row(M - p + r) = dphi.row(r);
        lhs(M - p + r) = phi(r);
      }
    }
    res = lhs - rhs;
    // Residuals are measured against the size of the terms they balance.
    worst = 0.0;
    for (int r = 0; r < M; ++r) {
      const double scale = 1.0 + std::abs(rhs(r)) + jac.row(r).cwiseAbs().dot(u.cwiseAbs().transpose());
      worst = std::max(worst, std::abs(res(r)) / scale);
    }
    if (!std::isfinite(worst)) break;
    if (worst <= tol) return u;
    if (it == max_iter) break;
    Eigen::FullPivLU<Matrix<M>> lu(jac);
    if (!lu.isInvertible()) throw SolveError("singular boundary system", worst);
    const State<M> step = lu.solve(res);
    u -= step;
    if (step.cwiseAbs().maxCoeff() <= 1e-15 * (1.0 + u.cwiseAbs().maxCoeff())) return u;
  }
  throw SolveError("boundary Newton iteration did not converge", worst);
}

/// Solves the outgoing rows l_m U_x = V*'_m together with the differentiated
/// boundary condition phi_U A U_x = -g' - phi_U T0.
template <int M>
State<M> ilw_first_derivative(const State<M>& u0, const CharacteristicDerivatives<M>& cd,
                              const ProblemDefinition<M>& problem, const BoundaryCondition<M>& bc,
                              const DynVector& gprime, const State<M>& t0 = State<M>::Zero()) {
  const int p = bc.rows;
  const auto out = cd.outgoing(M - p);
  Matrix<M> sys;
  State<M> rhs;
  for (int r = 0; r < M - p; ++r) {
    sys.row(r) = cd.eig.left.row(out[r]);
    rhs(r) = cd.v[1](out[r]);
  }
  if (p > 0) {
    const DynMatrix dphi = bc.constraint_jacobian(u0);
    const Matrix<M> a = problem.jacobian(u0);
    const DynMatrix rows = dphi * a;
    const DynVector b = -gprime - dphi * t0;
    for (int r = 0; r < p; ++r) {
      sys.row(M - p + r) = rows.row(r);
      rhs(M - p + r) = b(r);
    }
  }
  Eigen::FullPivLU<Matrix<M>> lu(sys);
  if (!lu.isInvertible()) throw SolveError("singular inverse Lax-Wendroff system", 0.0);
  return lu.solve(rhs);
}

/// U^(k) = R V*^(k) for k = 2..K-1.
template <int M>
std::vector<State<M>> higher_derivatives_by_extrapolation(const CharacteristicDerivatives<M>& cd, int depth) {
  std::vector<State<M>> d;
  for (int k = 2; k < depth; ++k) d.push_back(cd.eig.right * cd.v[k]);
  return d;
}

/// Stage-0 procedure against data g, g' (also reused by the intermediate
/// condition variant with shifted data).
template <int M>
BoundaryDerivatives<M> boundary_derivatives_from_data(const CharacteristicDerivatives<M>& cd,
                                                      const ProblemDefinition<M>& problem,
                                                      const BoundaryCondition<M>& bc, const DynVector& g,
                                                      const DynVector& gprime, int stage,
                                                      const BoundaryOptions& opts,
                                                      const std::function<State<M>(const State<M>&)>& tangential = {}) {
  BoundaryDerivatives<M> bd;
  bd.side = cd.side;
  bd.stage = stage;
  const int K = static_cast<int>(cd.v.size());
  bd.d.reserve(K);
  const State<M> u0 = solve_boundary_state(cd, bc, g, opts.newton_tolerance, opts.newton_max_iterations);
  const State<M> t0 = tangential ? tangential(u0) : State<M>::Zero();
  bd.d.push_back(u0);
  bd.d.push_back(ilw_first_derivative(u0, cd, problem, bc, gprime, t0));
  for (auto& dk : higher_derivatives_by_extrapolation(cd, K)) bd.d.push_back(dk);
  return bd;
}

/// RK-stage relation for the k = 0, 1 entries; k >= 2 from the stage field.
template <int M>
BoundaryDerivatives<M> stage_boundary_derivatives(const std::vector<BoundaryDerivatives<M>>& prev,
                                                  const std::vector<TangentialSource<M>>& tangential,
                                                  const RKTableau& tableau, int stage, double dt,
                                                  const ProblemDefinition<M>& problem,
                                                  const CharacteristicDerivatives<M>& cd) {
  if (stage < 1 || stage >= tableau.stages) throw InvalidArgument("stage index out of range");
  if (static_cast<int>(prev.size()) < stage) throw InvalidArgument("missing boundary data of earlier stages");
  const int K = static_cast<int>(cd.v.size());
  if (K < 3) throw InvalidArgument("stage relation needs a Taylor depth of at least 3");

  BoundaryDerivatives<M> bd;
  bd.side = cd.side;
  bd.stage = stage;
  State<M> d0 = State<M>::Zero();
  State<M> d1 = State<M>::Zero();
  for (int k = 0; k < stage; ++k) {
    const auto& q = prev[k].d;
    const double a = tableau.a(stage, k);
    const double b = tableau.b(stage, k);
    d0 += a * q[0];
    d1 += a * q[1];
    if (b != 0.0) {
      const Matrix<M> jac = problem.jacobian(q[0]);
      const TangentialSource<M> ts = k < static_cast<int>(tangential.size()) ? tangential[k] : TangentialSource<M>{};
      d0 -= b * dt * (jac * q[1] + ts.t0);
      d1 -= b * dt * (problem.hessian(q[0], q[1], q[1]) + jac * q[2] + ts.t1);
    }
  }
  bd.d.push_back(d0);
  bd.d.push_back(d1);
  for (auto& dk : higher_derivatives_by_extrapolation(cd, K)) bd.d.push_back(dk);
  return bd;
}

/// Shifted boundary data of the intermediate-condition variant (third-order
/// scheme only): returns (g~, g~').
template <int M>
std::pair<DynVector, DynVector> tan_shu_stage_data(const BoundaryCondition<M>& bc, int stage, double t_n, double dt) {
  double c1 = 0.0, c2 = 0.0;
  if (stage == 1) {
    c1 = 1.0;
  } else if (stage == 2) {
    c1 = 0.5;
    c2 = 0.25;
  } else {
    throw InvalidArgument("intermediate boundary conditions exist for stages 1 and 2 only");
  }
  const DynVector g0 = bc.data(t_n, 0), g1 = bc.data(t_n, 1), g2 = bc.data(t_n, 2), g3 = bc.data(t_n, 3);
  return {g0 + c1 * dt * g1 + c2 * dt * dt * g2, g1 + c1 * dt * g2 + c2 * dt * dt * g3};
}

template <int M>
BoundaryDerivatives<M> tan_shu_stage_derivatives(int stage, double dt, double t_n, const ProblemDefinition<M>& problem,
                                                 const BoundaryCondition<M>& bc,
                                                 const CharacteristicDerivatives<M>& cd,
                                                 const BoundaryOptions& opts = {}) {
  const auto [g, gp] = tan_shu_stage_data(bc, stage, t_n, dt);
  return boundary_derivatives_from_data(cd, problem, bc, g, gp, stage, opts);
}

/// ghost = sum_k (x_ghost - x_b)^k / k! d[k]
template <int M>
void fill_ghosts_taylor(const BoundaryDerivatives<M>& bd, Field<M>& field) {
  const int n = field.size();
  const double dx = field.grid().dx();
  const int s = side_sign(bd.side);
  for (int m = 1; m <= field.ghosts(); ++m) {
    const double h = s * (0.5 - m) * dx;
    State<M> v = State<M>::Zero();
    double c = 1.0;
    for (int k = 0; k < bd.depth(); ++k) {
      v += c * bd.d[k];
      c *= h / (k + 1);
    }
    field[bd.side == Side::left ? -m : n - 1 + m] = v;
  }
}

inline bool is_ssp33(const RKTableau& t) { return scheme_id(t) == "ssp33"; }

/// Taylor depth and extrapolation type after applying defaults.
template <int M>
int resolve_taylor_depth(const ProblemDefinition<M>& problem, const ReconstructionConfig& cfg,
                         const BoundaryOptions& opts) {
  if (opts.taylor_depth > 0) return opts.taylor_depth;
  return problem.smooth ? cfg.order : problem.nonsmooth_taylor_depth;
}

template <int M>
Extrapolation resolve_extrapolation(const ProblemDefinition<M>& problem, const BoundaryOptions& opts) {
  if (opts.extrapolation) return *opts.extrapolation;
  return problem.smooth ? Extrapolation::lagrange : Extrapolation::weno;
}

/// Boundary state of one side of one grid line across the stages of a step.
template <int M>
class SideBoundary {
 public:
  using TangentialFn = std::function<State<M>(const State<M>&)>;

  SideBoundary(Side side, const BoundaryCondition<M>& bc, const BoundaryOptions& opts, int depth, double dx)
      : side_(side),
        bc_(&bc),
        opts_(opts),
        ex_(depth, dx, opts.extrapolation.value_or(Extrapolation::lagrange), opts.epsilon) {
    if (depth < 3) throw InvalidArgument("Taylor depth must be at least 3");
  }

  Side side() const { return side_; }
  int depth() const { return ex_.depth(); }
  const BoundaryCondition<M>& condition() const { return *bc_; }

  /// Computes and caches the derivative stack of `stage`. Stage 0 starts a
  /// new step. `tangential` (stage 0 only) maps U^(0) to T0 for the ILW row.
  const BoundaryDerivatives<M>& compute(const Field<M>& field, const ProblemDefinition<M>& problem,
                                        const RKTableau& tableau, int stage, double t_n, double dt,
                                        const TangentialFn& tangential = {}) {
    if (stage == 0) {
      stacks_.clear();
      tangential_.clear();
    } else if (static_cast<int>(stacks_.size()) != stage) {
      throw InvalidArgument("boundary stages must be computed in order, starting from stage 0");
    }
    const auto cd = outgoing_char_derivatives(field, problem, side_, ex_);
    const int p = bc_->rows;
    BoundaryDerivatives<M> bd;
    if (p == 0) {
      const DynVector none(0);
      bd = boundary_derivatives_from_data(cd, problem, *bc_, none, none, stage, opts_);
    } else if (stage == 0) {
      bd = boundary_derivatives_from_data(cd, problem, *bc_, bc_->data(t_n, 0), bc_->data(t_n, 1), 0, opts_,
                                          tangential);
      if (tangential) {
        TangentialSource<M> ts;
        ts.t0 = tangential(bd.d[0]);
        set_tangential(0, ts);
      }
    } else if (opts_.method == BoundaryMethod::rk_stage) {
      bd = stage_boundary_derivatives(stacks_, tangential_, tableau, stage, dt, problem, cd);
    } else {
      if (!is_ssp33(tableau))
        throw InvalidArgument("intermediate boundary conditions are defined for SSP(3,3) only");
      bd = tan_shu_stage_derivatives(stage, dt, t_n, problem, *bc_, cd, opts_);
    }
    stacks_.push_back(std::move(bd));
    return stacks_.back();
  }

  void set_tangential(int stage, const TangentialSource<M>& ts) {
    if (static_cast<int>(tangential_.size()) <= stage) tangential_.resize(stage + 1);
    tangential_[stage] = ts;
  }

  const BoundaryDerivatives<M>& stack(int stage) const { return stacks_.at(stage); }
  int computed_stages() const { return static_cast<int>(stacks_.size()); }

  void fill(Field<M>& field, int stage) const { fill_ghosts_taylor(stacks_.at(stage), field); }

 private:
  Side side_;
  const BoundaryCondition<M>* bc_;
  BoundaryOptions opts_;
  Extrapolator ex_;
  std::vector<BoundaryDerivatives<M>> stacks_;
  std::vector<TangentialSource<M>> tangential_;
};

/// Ghost filling for a 1D field, both sides.
template <int M>
class BoundaryDriver {
 public:
  BoundaryDriver(const ProblemDefinition<M>& problem, const Grid1D& grid, const ReconstructionConfig& cfg,
                 BoundaryOptions opts = {})
      : problem_(&problem),
        opts_(with_defaults(problem, opts)),
        left_(Side::left, problem.left, opts_, resolve_taylor_depth(problem, cfg, opts), grid.dx()),
        right_(Side::right, problem.right, opts_, resolve_taylor_depth(problem, cfg, opts), grid.dx()) {}

  const BoundaryOptions& options() const { return opts_; }
  const SideBoundary<M>& side(Side s) const { return s == Side::left ? left_ : right_; }

  /// Computes the stage stacks on both sides and fills the ghosts.
  void apply(Field<M>& field, const RKTableau& tableau, int stage, double t_n, double dt) {
    if (opts_.method == BoundaryMethod::tan_shu && !is_ssp33(tableau))
      throw InvalidArgument("intermediate boundary conditions are defined for SSP(3,3) only");
    for (auto* sb : {&left_, &right_}) {
      sb->compute(field, *problem_, tableau, stage, t_n, dt);
      sb->fill(field, stage);
    }
  }

 private:
  static BoundaryOptions with_defaults(const ProblemDefinition<M>& problem, BoundaryOptions opts) {
    opts.extrapolation = resolve_extrapolation(problem, opts);
    return opts;
  }

  const ProblemDefinition<M>* problem_;
  BoundaryOptions opts_;
  SideBoundary<M> left_;
  SideBoundary<M> right_;
};

}  // namespace rkbc
