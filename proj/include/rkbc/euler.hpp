// Compressible Euler equations (ideal gas) in conservative variables.
//
// 1D state (rho, rho u, E); 2D state (rho, rho u, rho v, E). Fluxes and
// Jacobians are templated on the scalar type so second derivatives can be
// taken by forward-mode differentiation of the analytic Jacobian.
#pragma once

#include "rkbc/problem.hpp"
#include "rkbc/types.hpp"

#include <unsupported/Eigen/AutoDiff>

#include <cmath>

namespace rkbc::euler {

inline constexpr double kGamma = 1.4;

/// F_UU(U)[v, w] = d/ds (F_U(U + s w) v) at s = 0, for any Jacobian functor
/// templated on the scalar type.
template <int M, class JacobianFn>
State<M> hessian_from_jacobian(JacobianFn&& jac, const State<M>& u, const State<M>& v, const State<M>& w) {
  using Scalar = Eigen::AutoDiffScalar<Eigen::Matrix<double, 1, 1>>;
  Eigen::Matrix<Scalar, M, 1> ua;
  for (int i = 0; i < M; ++i) ua(i) = Scalar(u(i), Eigen::Matrix<double, 1, 1>(w(i)));
  const Eigen::Matrix<Scalar, M, M> j = jac(ua);
  State<M> out = State<M>::Zero();
  for (int r = 0; r < M; ++r)
    for (int c = 0; c < M; ++c) out(r) += j(r, c).derivatives()(0) * v(c);
  return out;
}

// ---------------------------------------------------------------------------
// 1D

template <class T>
T pressure1d(const Eigen::Matrix<T, 3, 1>& u) {
  return (kGamma - 1.0) * (u(2) - 0.5 * u(1) * u(1) / u(0));
}

template <class T>
Eigen::Matrix<T, 3, 1> flux1d(const Eigen::Matrix<T, 3, 1>& u) {
  const T vel = u(1) / u(0);
  const T p = pressure1d(u);
  Eigen::Matrix<T, 3, 1> f;
  f << u(1), u(1) * vel + p, (u(2) + p) * vel;
  return f;
}

template <class T>
Eigen::Matrix<T, 3, 3> jacobian1d(const Eigen::Matrix<T, 3, 1>& u) {
  const double g1 = kGamma - 1.0;
  const T vel = u(1) / u(0);
  const T h = (u(2) + pressure1d(u)) / u(0);
  Eigen::Matrix<T, 3, 3> a;
  a(0, 0) = T(0.0);
  a(0, 1) = T(1.0);
  a(0, 2) = T(0.0);
  a(1, 0) = 0.5 * (kGamma - 3.0) * vel * vel;
  a(1, 1) = (3.0 - kGamma) * vel;
  a(1, 2) = T(g1);
  a(2, 0) = 0.5 * g1 * vel * vel * vel - vel * h;
  a(2, 1) = h - g1 * vel * vel;
  a(2, 2) = kGamma * vel;
  return a;
}

inline State<3> conservative1d(double rho, double vel, double p) {
  return State<3>(rho, rho * vel, p / (kGamma - 1.0) + 0.5 * rho * vel * vel);
}

inline double sound_speed1d(const State<3>& u) {
  const double p = pressure1d(u);
  if (!(u(0) > 0.0) || !(p > 0.0)) throw HyperbolicityError("nonpositive density or pressure");
  return std::sqrt(kGamma * p / u(0));
}

inline Eigensystem<3> eigensystem1d(const State<3>& u) {
  const double c = sound_speed1d(u);
  const double vel = u(1) / u(0);
  const double h = (u(2) + pressure1d(u)) / u(0);
  const double b1 = (kGamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * vel * vel;
  Eigensystem<3> es;
  es.eigenvalues << vel - c, vel, vel + c;
  es.right << 1.0, 1.0, 1.0,
              vel - c, vel, vel + c,
              h - vel * c, 0.5 * vel * vel, h + vel * c;
  es.left << 0.5 * (b2 + vel / c), -0.5 * (b1 * vel + 1.0 / c), 0.5 * b1,
             1.0 - b2, b1 * vel, -b1,
             0.5 * (b2 - vel / c), -0.5 * (b1 * vel - 1.0 / c), 0.5 * b1;
  return es;
}

inline double max_speed1d(const State<3>& u) { return std::abs(u(1) / u(0)) + sound_speed1d(u); }

/// Fills the flux/Jacobian/Hessian/eigensystem members of a 1D Euler problem.
inline void install_euler1d(ProblemDefinition<3>& p) {
  p.flux = [](const State<3>& u) { return flux1d<double>(u); };
  p.jacobian = [](const State<3>& u) { return jacobian1d<double>(u); };
  p.hessian = [](const State<3>& u, const State<3>& v, const State<3>& w) {
    return hessian_from_jacobian<3>([](const auto& x) { return jacobian1d(x); }, u, v, w);
  };
  p.eigensystem = eigensystem1d;
  p.max_speed = max_speed1d;
}

// ---------------------------------------------------------------------------
// 2D, x-direction flux. The y-direction quantities follow by swapping the
// two momentum components.

template <class T>
T pressure2d(const Eigen::Matrix<T, 4, 1>& u) {
  return (kGamma - 1.0) * (u(3) - 0.5 * (u(1) * u(1) + u(2) * u(2)) / u(0));
}

template <class T>
Eigen::Matrix<T, 4, 1> flux2d_x(const Eigen::Matrix<T, 4, 1>& u) {
  const T vx = u(1) / u(0);
  const T p = pressure2d(u);
  Eigen::Matrix<T, 4, 1> f;
  f << u(1), u(1) * vx + p, u(2) * vx, (u(3) + p) * vx;
  return f;
}

template <class T>
Eigen::Matrix<T, 4, 4> jacobian2d_x(const Eigen::Matrix<T, 4, 1>& u) {
  const double g1 = kGamma - 1.0;
  const T vx = u(1) / u(0);
  const T vy = u(2) / u(0);
  const T q2 = vx * vx + vy * vy;
  const T h = (u(3) + pressure2d(u)) / u(0);
  Eigen::Matrix<T, 4, 4> a;
  a(0, 0) = T(0.0);
  a(0, 1) = T(1.0);
  a(0, 2) = T(0.0);
  a(0, 3) = T(0.0);
  a(1, 0) = 0.5 * g1 * q2 - vx * vx;
  a(1, 1) = (3.0 - kGamma) * vx;
  a(1, 2) = -g1 * vy;
  a(1, 3) = T(g1);
  a(2, 0) = -vx * vy;
  a(2, 1) = vy;
  a(2, 2) = vx;
  a(2, 3) = T(0.0);
  a(3, 0) = vx * (0.5 * g1 * q2 - h);
  a(3, 1) = h - g1 * vx * vx;
  a(3, 2) = -g1 * vx * vy;
  a(3, 3) = kGamma * vx;
  return a;
}

template <class T>
Eigen::Matrix<T, 4, 1> swap_momentum(const Eigen::Matrix<T, 4, 1>& u) {
  Eigen::Matrix<T, 4, 1> s = u;
  std::swap(s(1), s(2));
  return s;
}

template <class T>
Eigen::Matrix<T, 4, 1> flux2d_y(const Eigen::Matrix<T, 4, 1>& u) {
  return swap_momentum<T>(flux2d_x<T>(swap_momentum<T>(u)));
}

template <class T>
Eigen::Matrix<T, 4, 4> jacobian2d_y(const Eigen::Matrix<T, 4, 1>& u) {
  Eigen::Matrix<T, 4, 4> a = jacobian2d_x<T>(swap_momentum<T>(u));
  a.row(1).swap(a.row(2));
  a.col(1).swap(a.col(2));
  return a;
}

inline State<4> conservative2d(double rho, double vx, double vy, double p) {
  return State<4>(rho, rho * vx, rho * vy, p / (kGamma - 1.0) + 0.5 * rho * (vx * vx + vy * vy));
}

inline double sound_speed2d(const State<4>& u) {
  const double p = pressure2d(u);
  if (!(u(0) > 0.0) || !(p > 0.0)) throw HyperbolicityError("nonpositive density or pressure");
  return std::sqrt(kGamma * p / u(0));
}

inline Eigensystem<4> eigensystem2d_x(const State<4>& u) {
  const double c = sound_speed2d(u);
  const double vx = u(1) / u(0);
  const double vy = u(2) / u(0);
  const double q2 = vx * vx + vy * vy;
  const double h = (u(3) + pressure2d(u)) / u(0);
  const double b1 = (kGamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * q2;
  Eigensystem<4> es;
  es.eigenvalues << vx - c, vx, vx, vx + c;
  es.right << 1.0, 1.0, 0.0, 1.0,
              vx - c, vx, 0.0, vx + c,
              vy, vy, 1.0, vy,
              h - vx * c, 0.5 * q2, vy, h + vx * c;
  es.left << 0.5 * (b2 + vx / c), -0.5 * (b1 * vx + 1.0 / c), -0.5 * b1 * vy, 0.5 * b1,
             1.0 - b2, b1 * vx, b1 * vy, -b1,
             -vy, 0.0, 1.0, 0.0,
             0.5 * (b2 - vx / c), -0.5 * (b1 * vx - 1.0 / c), -0.5 * b1 * vy, 0.5 * b1;
  return es;
}

inline Eigensystem<4> eigensystem2d_y(const State<4>& u) {
  Eigensystem<4> es = eigensystem2d_x(swap_momentum<double>(u));
  es.right.row(1).swap(es.right.row(2));
  es.left.col(1).swap(es.left.col(2));
  return es;
}

}  // namespace rkbc::euler
