// Isentropic vortex convected by the mean flow rho = u = v = 1, T = 1, on
// [-0.5, 1]^2. Exact solution U(t, x, y) = U0(x - t, y - t).
//
// Inflow edges (left, bottom) prescribe rho, u and v; outflow edges (right,
// top) prescribe rho. Boundary data and tangential derivatives are exact and
// obtained by Taylor-mode differentiation of the closed form.
#pragma once

#include "rkbc/euler.hpp"
#include "rkbc/jet.hpp"
#include "rkbc/solver2d.hpp"

#include <array>
#include <numbers>

namespace rkbc {

namespace detail {

template <class T>
std::array<T, 4> vortex_primitive(const T& xb, const T& yb, double eps) {
  using std::exp;
  using std::pow;
  using std::numbers::pi;
  const double g = euler::kGamma;
  const T r2 = xb * xb + yb * yb;
  const T e = exp(0.5 * (1.0 - r2));
  const double amp = eps / (2.0 * pi);
  const T du = -amp * e * yb;
  const T dv = amp * e * xb;
  const T temp = 1.0 - (g - 1.0) * eps * eps / (8.0 * g * pi * pi) * e * e;
  const T rho = pow(temp, 1.0 / (g - 1.0));
  const T p = pow(temp, g / (g - 1.0));
  return {rho, 1.0 + du, 1.0 + dv, p};
}

template <class T>
std::array<T, 4> vortex_conservative(const T& xb, const T& yb, double eps) {
  const auto [rho, u, v, p] = vortex_primitive(xb, yb, eps);
  return {rho, rho * u, rho * v, p / (euler::kGamma - 1.0) + 0.5 * rho * (u * u + v * v)};
}

inline State<4> vortex_state(double xb, double yb, double eps) {
  const auto c = vortex_conservative(xb, yb, eps);
  return State<4>(c[0], c[1], c[2], c[3]);
}

inline void install_euler2d(ProblemDefinition<4>& x, ProblemDefinition<4>& y) {
  x.flux = [](const State<4>& u) { return euler::flux2d_x<double>(u); };
  x.jacobian = [](const State<4>& u) { return euler::jacobian2d_x<double>(u); };
  x.hessian = [](const State<4>& u, const State<4>& v, const State<4>& w) {
    return euler::hessian_from_jacobian<4>([](const auto& s) { return euler::jacobian2d_x(s); }, u, v, w);
  };
  x.eigensystem = euler::eigensystem2d_x;
  x.max_speed = [](const State<4>& u) { return std::abs(u(1) / u(0)) + euler::sound_speed2d(u); };

  y.flux = [](const State<4>& u) { return euler::flux2d_y<double>(u); };
  y.jacobian = [](const State<4>& u) { return euler::jacobian2d_y<double>(u); };
  y.hessian = [](const State<4>& u, const State<4>& v, const State<4>& w) {
    return euler::hessian_from_jacobian<4>([](const auto& s) { return euler::jacobian2d_y(s); }, u, v, w);
  };
  y.eigensystem = euler::eigensystem2d_y;
  y.max_speed = [](const State<4>& u) { return std::abs(u(2) / u(0)) + euler::sound_speed2d(u); };
}

}  // namespace detail

inline Problem2D<4> make_euler2d_vortex(double eps = 1.0) {
  Problem2D<4> p;
  p.name = "vortex2d";
  p.a = -0.5;
  p.b = 1.0;
  p.x_line.name = "vortex2d-x";
  p.y_line.name = "vortex2d-y";
  detail::install_euler2d(p.x_line, p.y_line);

  p.initial = [eps](double x, double y) { return detail::vortex_state(x, y, eps); };
  p.exact = [eps](double t, double x, double y) { return detail::vortex_state(x - t, y - t, eps); };
  p.exact_dx = [eps](double t, double x, double y) {
    const auto c = detail::vortex_conservative(Jet<1>::variable(x - t), Jet<1>(y - t), eps);
    return State<4>(c[0].c[1], c[1].c[1], c[2].c[1], c[3].c[1]);
  };
  p.exact_dy = [eps](double t, double x, double y) {
    const auto c = detail::vortex_conservative(Jet<1>(x - t), Jet<1>::variable(y - t), eps);
    return State<4>(c[0].c[1], c[1].c[1], c[2].c[1], c[3].c[1]);
  };

  p.edge_condition = [eps, a = p.a, b = p.b](Edge e, double s) {
    double xb = 0.0, yb = 0.0;
    switch (e) {
      case Edge::left: xb = a, yb = s; break;
      case Edge::right: xb = b, yb = s; break;
      case Edge::bottom: xb = s, yb = a; break;
      case Edge::top: xb = s, yb = b; break;
    }
    const bool inflow = e == Edge::left || e == Edge::bottom;
    BoundaryCondition<4> bc;
    bc.rows = inflow ? 3 : 1;
    if (inflow) {
      bc.constraint = [](const State<4>& u) {
        DynVector r(3);
        r << u(0), u(1) / u(0), u(2) / u(0);
        return r;
      };
      bc.constraint_jacobian = [](const State<4>& u) {
        DynMatrix j = DynMatrix::Zero(3, 4);
        j(0, 0) = 1.0;
        j(1, 0) = -u(1) / (u(0) * u(0));
        j(1, 1) = 1.0 / u(0);
        j(2, 0) = -u(2) / (u(0) * u(0));
        j(2, 2) = 1.0 / u(0);
        return j;
      };
    } else {
      bc.constraint = [](const State<4>& u) { return DynVector::Constant(1, u(0)); };
      bc.constraint_jacobian = [](const State<4>&) {
        DynMatrix j = DynMatrix::Zero(1, 4);
        j(0, 0) = 1.0;
        return j;
      };
    }
    bc.data = [eps, xb, yb, inflow](double t, int order) {
      if (order < 0 || order > 3) throw InvalidArgument("boundary data derivative order > 3");
      const Jet<3> tt = Jet<3>::variable(t);
      const auto w = detail::vortex_primitive(xb - tt, yb - tt, eps);
      DynVector g(inflow ? 3 : 1);
      g(0) = w[0].derivative(order);
      if (inflow) {
        g(1) = w[1].derivative(order);
        g(2) = w[2].derivative(order);
      }
      return g;
    };
    return bc;
  };
  return p;
}

}  // namespace rkbc
