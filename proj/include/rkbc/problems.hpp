// One-dimensional benchmark problems.
//
//   advect-smooth / advect-step   u_t + u_x = 0 on [-1, 1], inflow at x = -1
//   burgers                       u_t + (u^2/2)_x = 0 on [-1/2, 3/2], data on both sides
//   euler-smooth                  density wave on [-pi, pi]
//   blast                         interacting blast waves between solid walls
#pragma once

#include "rkbc/euler.hpp"
#include "rkbc/problem.hpp"

#include <cmath>
#include <numbers>

namespace rkbc {

enum class AdvectionVariant { smooth, step };

namespace detail {

/// Scalar constraint u = g(t).
inline BoundaryCondition<1> scalar_dirichlet(std::function<DynVector(double, int)> data) {
  BoundaryCondition<1> bc;
  bc.rows = 1;
  bc.constraint = [](const State<1>& u) { return DynVector::Constant(1, u(0)); };
  bc.constraint_jacobian = [](const State<1>&) { return DynMatrix::Constant(1, 1, 1.0); };
  bc.data = std::move(data);
  return bc;
}

inline DynVector scalar(double v) { return DynVector::Constant(1, v); }

inline void install_scalar(ProblemDefinition<1>& p, std::function<double(double)> f,
                           std::function<double(double)> df, std::function<double(double)> d2f) {
  p.flux = [f](const State<1>& u) { return State<1>(f(u(0))); };
  p.jacobian = [df](const State<1>& u) { return Matrix<1>(df(u(0))); };
  p.hessian = [d2f](const State<1>& u, const State<1>& v, const State<1>& w) {
    return State<1>(d2f(u(0)) * v(0) * w(0));
  };
  p.eigensystem = [df](const State<1>& u) {
    Eigensystem<1> es;
    es.eigenvalues(0) = df(u(0));
    es.left(0, 0) = 1.0;
    es.right(0, 0) = 1.0;
    return es;
  };
  p.max_speed = [df](const State<1>& u) { return std::abs(df(u(0))); };
}

}  // namespace detail

/// Scalar conservation law u_t + f(u)_x = 0 with prescribed inflow data at
/// one or both ends; used directly by tests that need custom boundary data.
inline ProblemDefinition<1> make_scalar_problem(std::string name, double a, double b,
                                                std::function<double(double)> f,
                                                std::function<double(double)> df,
                                                std::function<double(double)> d2f) {
  ProblemDefinition<1> p;
  p.name = std::move(name);
  p.a = a;
  p.b = b;
  detail::install_scalar(p, std::move(f), std::move(df), std::move(d2f));
  return p;
}

inline ProblemDefinition<1> make_linear_advection(AdvectionVariant variant) {
  using std::numbers::pi;
  ProblemDefinition<1> p = make_scalar_problem(
      variant == AdvectionVariant::smooth ? "advect-smooth" : "advect-step", -1.0, 1.0,
      [](double u) { return u; }, [](double) { return 1.0; }, [](double) { return 0.0; });

  p.initial = [](double x) { return State<1>(0.25 + 0.5 * std::sin(pi * x)); };

  if (variant == AdvectionVariant::smooth) {
    p.exact = [](double t, double x) { return State<1>(0.25 + 0.5 * std::sin(pi * (x - t))); };
    p.left = detail::scalar_dirichlet([](double t, int order) {
      const double s = std::sin(pi * (1.0 + t));
      const double c = std::cos(pi * (1.0 + t));
      switch (order) {
        case 0: return detail::scalar(0.25 - 0.5 * s);
        case 1: return detail::scalar(-0.5 * pi * c);
        case 2: return detail::scalar(0.5 * pi * pi * s);
        case 3: return detail::scalar(0.5 * pi * pi * pi * c);
        default: throw InvalidArgument("boundary data derivative order > 3");
      }
    });
  } else {
    p.exact = [](double t, double x) {
      if (x < t - 2.0) return State<1>(-1.0);
      if (x < t - 1.0) return State<1>(0.25);
      return State<1>(0.25 + 0.5 * std::sin(pi * (x - t)));
    };
    p.left = detail::scalar_dirichlet([](double t, int order) {
      if (order == 0) return detail::scalar(t <= 1.0 ? 0.25 : -1.0);
      return detail::scalar(0.0);
    });
  }
  return p;
}

inline ProblemDefinition<1> make_burgers() {
  ProblemDefinition<1> p = make_scalar_problem(
      "burgers", -0.5, 1.5, [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
      [](double) { return 1.0; });

  auto exact = [](double t, double x) {
    if (t >= 1.0) throw InvalidArgument("the Burgers reference solution is valid for t < 1 only");
    if (x < t) return 1.0;
    if (x < 2.0 - t) return (1.0 - x) / (1.0 - t);
    return -1.0;
  };
  p.exact = [exact](double t, double x) { return State<1>(exact(t, x)); };
  p.initial = [exact](double x) { return State<1>(exact(0.0, x)); };
  p.left = detail::scalar_dirichlet([exact](double t, int order) {
    if (order == 0) return detail::scalar(exact(t, -0.5));
    return detail::scalar(0.0);
  });
  p.right = detail::scalar_dirichlet([exact](double t, int order) {
    if (order == 0) return detail::scalar(exact(t, 1.5));
    if (t >= 0.5) return detail::scalar(0.0);
    const double r = 1.0 / (1.0 - t);
    switch (order) {
      case 1: return detail::scalar(-0.5 * r * r);
      case 2: return detail::scalar(-r * r * r);
      case 3: return detail::scalar(-3.0 * r * r * r * r);
      default: throw InvalidArgument("boundary data derivative order > 3");
    }
  });
  return p;
}

namespace detail {

/// sin-wave density data 1 + 0.2 sin(t) and its time derivatives.
inline double wave_density(double t, int order) {
  switch (order) {
    case 0: return 1.0 + 0.2 * std::sin(t);
    case 1: return 0.2 * std::cos(t);
    case 2: return -0.2 * std::sin(t);
    case 3: return -0.2 * std::cos(t);
    default: throw InvalidArgument("boundary data derivative order > 3");
  }
}

inline DynVector density_constraint(const State<3>& u) { return DynVector::Constant(1, u(0)); }
inline DynMatrix density_constraint_jacobian(const State<3>&) {
  DynMatrix j = DynMatrix::Zero(1, 3);
  j(0, 0) = 1.0;
  return j;
}

inline DynVector velocity_constraint(const State<3>& u) { return DynVector::Constant(1, u(1) / u(0)); }
inline DynMatrix velocity_constraint_jacobian(const State<3>& u) {
  DynMatrix j = DynMatrix::Zero(1, 3);
  j(0, 0) = -u(1) / (u(0) * u(0));
  j(0, 1) = 1.0 / u(0);
  return j;
}

}  // namespace detail

inline ProblemDefinition<3> make_euler_smooth() {
  using std::numbers::pi;
  ProblemDefinition<3> p;
  p.name = "euler-smooth";
  p.a = -pi;
  p.b = pi;
  euler::install_euler1d(p);
  p.exact = [](double t, double x) { return euler::conservative1d(1.0 + 0.2 * std::sin(x - t), 1.0, 2.0); };
  p.initial = [](double x) { return euler::conservative1d(1.0 + 0.2 * std::sin(x), 1.0, 2.0); };

  // Left: density and velocity prescribed.
  p.left.rows = 2;
  p.left.constraint = [](const State<3>& u) {
    DynVector r(2);
    r << u(0), u(1) / u(0);
    return r;
  };
  p.left.constraint_jacobian = [](const State<3>& u) {
    DynMatrix j(2, 3);
    j.row(0) = detail::density_constraint_jacobian(u);
    j.row(1) = detail::velocity_constraint_jacobian(u);
    return j;
  };
  p.left.data = [](double t, int order) {
    DynVector g(2);
    g << detail::wave_density(t, order), order == 0 ? 1.0 : 0.0;
    return g;
  };

  // Right: density prescribed.
  p.right.rows = 1;
  p.right.constraint = detail::density_constraint;
  p.right.constraint_jacobian = detail::density_constraint_jacobian;
  p.right.data = [](double t, int order) { return DynVector::Constant(1, detail::wave_density(t, order)); };
  return p;
}

inline ProblemDefinition<3> make_blast_wave() {
  ProblemDefinition<3> p;
  p.name = "blast";
  p.a = 0.0;
  p.b = 1.0;
  euler::install_euler1d(p);
  p.initial = [](double x) {
    const double pressure = x < 0.1 ? 1.0e3 : (x < 0.9 ? 1.0e-2 : 1.0e2);
    return euler::conservative1d(1.0, 0.0, pressure);
  };
  BoundaryCondition<3> wall;
  wall.rows = 1;
  wall.constraint = detail::velocity_constraint;
  wall.constraint_jacobian = detail::velocity_constraint_jacobian;
  wall.data = [](double, int) { return DynVector::Zero(1); };
  p.left = wall;
  p.right = wall;
  p.smooth = false;
  p.nonsmooth_taylor_depth = 3;
  return p;
}

}  // namespace rkbc
