// Dimension-by-dimension extension to two space dimensions,
//
//   U_t + F(U)_x + G(U)_y = 0  on [a, b]^2,
//
// with the 1D flux operator applied along rows (F) and columns (G), and the
// 1D boundary procedure applied along every grid line normal to an edge. The
// tangential flux derivative enters the boundary relations as
//   T0 = G_U U_y,   T1 = G_UU[U_x, U_y] + G_U U_xy      (x edges)
// and symmetrically on y edges. Corner ghosts are never read by the
// dimension-by-dimension stencil and are left untouched.
#pragma once

#include "rkbc/boundary.hpp"
#include "rkbc/flux.hpp"
#include "rkbc/integrator.hpp"
#include "rkbc/parallel.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rkbc {

enum class Edge { left, right, bottom, top };

inline const char* to_string(Edge e) {
  switch (e) {
    case Edge::left: return "left";
    case Edge::right: return "right";
    case Edge::bottom: return "bottom";
    case Edge::top: return "top";
  }
  return "?";
}

template <int M>
struct Problem2D {
  std::string name;
  double a = 0.0;  // domain [a, b]^2
  double b = 1.0;

  /// x_line carries F and its derivatives; y_line carries G with y in the
  /// role of x. Their boundary-condition members are unused.
  ProblemDefinition<M> x_line;
  ProblemDefinition<M> y_line;
  bool periodic_y = false;

  std::function<State<M>(double x, double y)> initial;
  std::function<State<M>(double t, double x, double y)> exact;
  /// Exact tangential derivatives at t_n (optional; numerical otherwise).
  std::function<State<M>(double t, double x, double y)> exact_dx;
  std::function<State<M>(double t, double x, double y)> exact_dy;
  /// Boundary condition at the edge point with tangential coordinate s.
  std::function<BoundaryCondition<M>(Edge, double s)> edge_condition;

  bool has_exact() const { return static_cast<bool>(exact); }
};

template <int M>
class Field2D {
 public:
  Field2D() = default;
  Field2D(const Grid1D& gx, const Grid1D& gy)
      : gx_(gx), gy_(gy), stride_(gx.stored()), data_(static_cast<std::size_t>(gx.stored()) * gy.stored(), State<M>::Zero()) {
    if (gx.ghosts() != gy.ghosts()) throw InvalidArgument("both directions need the same ghost width");
  }

  const Grid1D& grid_x() const { return gx_; }
  const Grid1D& grid_y() const { return gy_; }
  int nx() const { return gx_.size(); }
  int ny() const { return gy_.size(); }
  int ghosts() const { return gx_.ghosts(); }

  State<M>& operator()(int i, int j) { return data_[index(i, j)]; }
  const State<M>& operator()(int i, int j) const { return data_[index(i, j)]; }

  /// Row j with its x ghosts, ghosts first.
  std::span<State<M>> row(int j) { return std::span<State<M>>(data_).subspan(index(-ghosts(), j), stride_); }
  std::span<const State<M>> row(int j) const {
    return std::span<const State<M>>(data_).subspan(index(-ghosts(), j), stride_);
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + gy_.ghosts()) * stride_ + static_cast<std::size_t>(i + gx_.ghosts());
  }

  Grid1D gx_, gy_;
  int stride_ = 0;
  std::vector<State<M>> data_;
};

/// Fourth-order first derivative of equally spaced samples; one-sided
/// five-point formulas at the two points nearest each end.
template <int M>
std::vector<State<M>> tangential_derivative(const std::vector<State<M>>& f, double h, bool periodic) {
  const int n = static_cast<int>(f.size());
  if (n < 5) throw InvalidArgument("tangential differentiation needs at least five points");
  std::vector<State<M>> d(n);
  const double c = 1.0 / (12.0 * h);
  auto at = [&](int j) -> const State<M>& { return f[((j % n) + n) % n]; };
  for (int j = 0; j < n; ++j) {
    if (periodic || (j >= 2 && j <= n - 3)) {
      d[j] = c * ((at(j - 2) - at(j + 2)) + 8.0 * (at(j + 1) - at(j - 1)));
    } else if (j == 0) {
      d[j] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    } else if (j == 1) {
      d[j] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    } else if (j == n - 2) {
      d[j] = -c * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
    } else {
      d[j] = -c * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
    }
  }
  return d;
}

template <int M>
double global_alpha_x(const Field2D<M>& u, const Problem2D<M>& problem) {
  double alpha = 0.0;
  for (int j = 0; j < u.ny(); ++j)
    for (int i = 0; i < u.nx(); ++i) alpha = std::max(alpha, problem.x_line.max_speed(u(i, j)));
  if (!(alpha > 0.0)) throw InvalidArgument("degenerate problem: all wave speeds vanish");
  return alpha;
}

template <int M>
double global_alpha_y(const Field2D<M>& u, const Problem2D<M>& problem) {
  double alpha = 0.0;
  for (int j = 0; j < u.ny(); ++j)
    for (int i = 0; i < u.nx(); ++i) alpha = std::max(alpha, problem.y_line.max_speed(u(i, j)));
  if (!(alpha > 0.0)) throw InvalidArgument("degenerate problem: all wave speeds vanish");
  return alpha;
}

/// L_x + L_y on the interior; ghosts of `u` must be filled.
template <int M>
class SpatialOperator2D {
 public:
  SpatialOperator2D(const Problem2D<M>& problem, const ReconstructionConfig& cfg, int threads = 1)
      : opx_(problem.x_line, cfg, 1), opy_(problem.y_line, cfg, 1), threads_(threads) {}

  /// out(i, j) for i in [0, nx), j in [0, ny), stored row-major with stride nx.
  void apply(const Field2D<M>& u, double alpha_x, double alpha_y, Bias bias, std::vector<State<M>>& out) const {
    const int nx = u.nx(), ny = u.ny(), g = u.ghosts();
    out.assign(static_cast<std::size_t>(nx) * ny, State<M>::Zero());
    const double dx = u.grid_x().dx(), dy = u.grid_y().dx();
    parallel_for(0, ny, threads_, [&](int j) {
      opx_.apply_line(u.row(j), g, dx, alpha_x, bias, std::span<State<M>>(out).subspan(static_cast<std::size_t>(j) * nx, nx));
    });
    parallel_for(0, nx, threads_, [&](int i) {
      std::vector<State<M>> col(ny + 2 * g), res(ny);
      for (int j = -g; j < ny + g; ++j) col[j + g] = u(i, j);
      opy_.apply_line(col, g, dy, alpha_y, bias, res);
      for (int j = 0; j < ny; ++j) out[static_cast<std::size_t>(j) * nx + i] += res[j];
    });
  }

 private:
  SpatialOperator<M> opx_;
  SpatialOperator<M> opy_;
  int threads_;
};

template <int M>
std::vector<State<M>> semidiscrete_2d(const Field2D<M>& u, const Problem2D<M>& problem, double alpha_x, double alpha_y,
                                      const ReconstructionConfig& cfg, Bias bias = Bias::upwind) {
  std::vector<State<M>> out;
  SpatialOperator2D<M>(problem, cfg).apply(u, alpha_x, alpha_y, bias, out);
  return out;
}

/// Edge-wise boundary treatment for all four edges (or the two x edges when
/// y is periodic).
template <int M>
class EdgeBoundary2D {
 public:
  EdgeBoundary2D(const Problem2D<M>& problem, const Grid1D& gx, const Grid1D& gy, const ReconstructionConfig& cfg,
                 BoundaryOptions opts, int threads = 1)
      : problem_(&problem), gx_(gx), gy_(gy), threads_(threads) {
    if (opts.method != BoundaryMethod::rk_stage)
      throw InvalidArgument("the two-dimensional solver supports the RK-stage boundary method only");
    opts.extrapolation = resolve_extrapolation(problem.x_line, opts);
    const int depth = resolve_taylor_depth(problem.x_line, cfg, opts);
    for (Edge e : edges()) {
      const bool xedge = e == Edge::left || e == Edge::right;
      const Grid1D& along = xedge ? gy : gx;
      auto& conds = conditions_[static_cast<int>(e)];
      conds.reserve(along.size());
      for (int l = 0; l < along.size(); ++l) conds.push_back(problem.edge_condition(e, along.x(l)));
      auto& sides = sides_[static_cast<int>(e)];
      sides.reserve(along.size());
      const Side side = (e == Edge::left || e == Edge::bottom) ? Side::left : Side::right;
      for (int l = 0; l < along.size(); ++l)
        sides.emplace_back(side, conds[l], opts, depth, xedge ? gx.dx() : gy.dx());
    }
  }

  std::vector<Edge> edges() const {
    if (problem_->periodic_y) return {Edge::left, Edge::right};
    return {Edge::left, Edge::right, Edge::bottom, Edge::top};
  }

  const SideBoundary<M>& side(Edge e, int line) const { return sides_[static_cast<int>(e)][line]; }

  void apply(Field2D<M>& u, const RKTableau& tableau, int stage, double t_n, double dt) {
    const int nx = u.nx(), ny = u.ny(), g = u.ghosts();
    const auto& pr = *problem_;
    const bool exact_tangential = stage == 0;

    if (pr.periodic_y) {
      for (int i = -g; i < nx + g; ++i)
        for (int m = 1; m <= g; ++m) {
          u(i, -m) = u(i, ny - m);
          u(i, ny - 1 + m) = u(i, m - 1);
        }
    }

    parallel_for(0, ny, threads_, [&](int j) {
      Field<M> line(gx_);
      for (int i = 0; i < nx; ++i) line[i] = u(i, j);
      for (Edge e : {Edge::left, Edge::right}) {
        auto& sb = sides_[static_cast<int>(e)][j];
        typename SideBoundary<M>::TangentialFn tan;
        if (exact_tangential && pr.exact_dy) {
          const State<M> uy = pr.exact_dy(t_n, e == Edge::left ? pr.a : pr.b, gy_.x(j));
          tan = [&pr, uy](const State<M>& u0) { return State<M>(pr.y_line.jacobian(u0) * uy); };
        }
        sb.compute(line, pr.x_line, tableau, stage, t_n, dt, tan);
        sb.fill(line, stage);
      }
      for (int m = 1; m <= g; ++m) {
        u(-m, j) = line[-m];
        u(nx - 1 + m, j) = line[nx - 1 + m];
      }
    });

    if (!pr.periodic_y) {
      parallel_for(0, nx, threads_, [&](int i) {
        Field<M> line(gy_);
        for (int j = 0; j < ny; ++j) line[j] = u(i, j);
        for (Edge e : {Edge::bottom, Edge::top}) {
          auto& sb = sides_[static_cast<int>(e)][i];
          typename SideBoundary<M>::TangentialFn tan;
          if (exact_tangential && pr.exact_dx) {
            const State<M> ux = pr.exact_dx(t_n, gx_.x(i), e == Edge::bottom ? pr.a : pr.b);
            tan = [&pr, ux](const State<M>& u0) { return State<M>(pr.x_line.jacobian(u0) * ux); };
          }
          sb.compute(line, pr.y_line, tableau, stage, t_n, dt, tan);
          sb.fill(line, stage);
        }
        for (int m = 1; m <= g; ++m) {
          u(i, -m) = line[-m];
          u(i, ny - 1 + m) = line[ny - 1 + m];
        }
      });
    }

    if (stage + 1 < tableau.stages)
      for (Edge e : edges()) update_tangential(e, stage, t_n);
  }

 private:
  /// T0, T1 of `stage` on edge e from the freshly computed stacks.
  void update_tangential(Edge e, int stage, double t_n) {
    const auto& pr = *problem_;
    const bool xedge = e == Edge::left || e == Edge::right;
    const Grid1D& along = xedge ? gy_ : gx_;
    const ProblemDefinition<M>& tangential_flux = xedge ? pr.y_line : pr.x_line;
    const auto& exact_d = xedge ? pr.exact_dy : pr.exact_dx;
    auto& sides = sides_[static_cast<int>(e)];
    const int n = along.size();
    std::vector<State<M>> d0(n), d1(n);
    for (int l = 0; l < n; ++l) {
      d0[l] = sides[l].stack(stage).d[0];
      d1[l] = sides[l].stack(stage).d[1];
    }
    const bool periodic = xedge && pr.periodic_y;
    std::vector<State<M>> ut;
    if (stage == 0 && exact_d) {
      ut.resize(n);
      const double xb = (e == Edge::left || e == Edge::bottom) ? pr.a : pr.b;
      for (int l = 0; l < n; ++l) ut[l] = xedge ? exact_d(t_n, xb, along.x(l)) : exact_d(t_n, along.x(l), xb);
    } else {
      ut = tangential_derivative(d0, along.dx(), periodic);
    }
    const auto mixed = tangential_derivative(d1, along.dx(), periodic);
    for (int l = 0; l < n; ++l) {
      const Matrix<M> jac = tangential_flux.jacobian(d0[l]);
      TangentialSource<M> ts;
      ts.t0 = jac * ut[l];
      ts.t1 = tangential_flux.hessian(d0[l], d1[l], ut[l]) + jac * mixed[l];
      sides[l].set_tangential(stage, ts);
    }
  }

  const Problem2D<M>* problem_;
  Grid1D gx_, gy_;
  int threads_;
  std::array<std::vector<BoundaryCondition<M>>, 4> conditions_;
  std::array<std::vector<SideBoundary<M>>, 4> sides_;
};

template <int M>
class Stepper2D {
 public:
  Stepper2D(const Problem2D<M>& problem, const Grid1D& gx, const Grid1D& gy, const RKTableau& tableau,
            const StepConfig& cfg)
      : tableau_(tableau),
        cfg_(cfg),
        op_(problem, cfg.reconstruction, cfg.threads),
        bc_(problem, gx, gy, cfg.reconstruction, cfg.boundary, cfg.threads),
        stages_(tableau.stages + 1, Field2D<M>(gx, gy)),
        ops_(tableau.stages),
        have_(tableau.stages, {false, false}) {
    cfg_.validate();
    if (gx.ghosts() < cfg.reconstruction.ghosts())
      throw InvalidArgument("grid has fewer ghost points than the reconstruction needs");
  }

  const EdgeBoundary2D<M>& boundary() const { return bc_; }

  void step(Field2D<M>& u, double t_n, double dt, double alpha_x, double alpha_y) {
    if (!(dt > 0.0)) throw InvalidArgument("time step must be positive");
    const int s = tableau_.stages;
    const int nx = u.nx(), ny = u.ny();
    stages_[0] = u;
    bc_.apply(stages_[0], tableau_, 0, t_n, dt);
    for (auto& h : have_) h = {false, false};

    for (int i = 1; i <= s; ++i) {
      auto& ui = stages_[i];
      for (int j = 0; j < ny; ++j)
        for (int q = 0; q < nx; ++q) ui(q, j).setZero();
      for (int k = 0; k < i; ++k) {
        const double a = tableau_.a(i, k);
        const double b = tableau_.b(i, k);
        if (a != 0.0)
          for (int j = 0; j < ny; ++j)
            for (int q = 0; q < nx; ++q) ui(q, j) += a * stages_[k](q, j);
        if (b == 0.0) continue;
        const Bias bias = b > 0.0 ? Bias::upwind : Bias::downwind;
        const int slot = bias == Bias::upwind ? 0 : 1;
        if (!have_[k][slot]) {
          op_.apply(stages_[k], alpha_x, alpha_y, bias, ops_[k][slot]);
          have_[k][slot] = true;
        }
        const auto& lk = ops_[k][slot];
        for (int j = 0; j < ny; ++j)
          for (int q = 0; q < nx; ++q) ui(q, j) += (dt * b) * lk[static_cast<std::size_t>(j) * nx + q];
      }
      if (i < s) bc_.apply(ui, tableau_, i, t_n, dt);
    }
    for (int j = 0; j < ny; ++j)
      for (int q = 0; q < nx; ++q) u(q, j) = stages_[s](q, j);
  }

 private:
  RKTableau tableau_;
  StepConfig cfg_;
  SpatialOperator2D<M> op_;
  EdgeBoundary2D<M> bc_;
  std::vector<Field2D<M>> stages_;
  std::vector<std::array<std::vector<State<M>>, 2>> ops_;
  std::vector<std::array<bool, 2>> have_;
};

template <int M>
void check_finite(const Field2D<M>& u, double t, double threshold) {
  for (int j = 0; j < u.ny(); ++j)
    for (int i = 0; i < u.nx(); ++i) {
      const auto& v = u(i, j);
      if (!v.allFinite() || v.cwiseAbs().maxCoeff() > threshold) throw BlowupError(t, u.grid_x().x(i));
    }
}

/// Time step dt = CFL dx / (alpha_x + alpha_y) under the CFL rule.
template <int M>
IntegrationReport<M> integrate_2d(Field2D<M>& u, const Problem2D<M>& problem, const RKTableau& tableau,
                                  const StepConfig& cfg) {
  Stepper2D<M> stepper(problem, u.grid_x(), u.grid_y(), tableau, cfg);
  IntegrationReport<M> report;
  const double dx = u.grid_x().dx();
  double t = 0.0;
  while (t < cfg.t_final) {
    double ax, ay;
    try {
      ax = global_alpha_x(u, problem);
      ay = global_alpha_y(u, problem);
    } catch (const HyperbolicityError& e) {
      throw BlowupError(t, e.location());
    }
    double dt = cfg.step_size(dx, ax + ay);
    bool last = false;
    if (t + dt >= cfg.t_final) {
      dt = cfg.t_final - t;
      last = true;
    }
    try {
      stepper.step(u, t, dt, ax, ay);
    } catch (const HyperbolicityError& e) {
      throw BlowupError(t, e.location());
    }
    t = last ? cfg.t_final : t + dt;
    check_finite(u, t, cfg.blowup_threshold);
    report.alpha.push_back(ax + ay);
    ++report.steps;
  }
  report.final_time = t;
  for (int j = 0; j < u.ny(); ++j)
    for (int i = 0; i < u.nx(); ++i) {
      report.min = report.min.cwiseMin(u(i, j));
      report.max = report.max.cwiseMax(u(i, j));
    }
  return report;
}

}  // namespace rkbc
