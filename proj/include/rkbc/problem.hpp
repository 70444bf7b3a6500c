// Problem description consumed by the flux operators and boundary machinery.
#pragma once

#include "rkbc/types.hpp"

#include <functional>
#include <string>

namespace rkbc {

template <int M>
struct Eigensystem {
  State<M> eigenvalues;  // ascending
  Matrix<M> left;        // rows are left eigenvectors
  Matrix<M> right;       // columns are right eigenvectors; left * right = I
};

/// Boundary condition B(U, t) = phi(U) - g(t) = 0 with p = rows constraints.
///
/// Every benchmark prescribes some function of the state (density, velocity)
/// against time-dependent data, so B_U = phi_U and B_t = -g'(t). The data
/// derivatives are analytic up to third order; the intermediate-stage
/// conditions of the comparison method need g', g'' and g'''.
template <int M>
struct BoundaryCondition {
  int rows = 0;
  std::function<DynVector(const State<M>&)> constraint;
  std::function<DynMatrix(const State<M>&)> constraint_jacobian;
  std::function<DynVector(double t, int order)> data;

  DynVector residual(const State<M>& u, double t) const { return constraint(u) - data(t, 0); }
  DynVector time_derivative(const State<M>& u, double t) const {
    (void)u;
    return -data(t, 1);
  }
};

/// An outflow side: nothing prescribed.
template <int M>
BoundaryCondition<M> no_boundary_condition() {
  return {};
}

template <int M>
struct ProblemDefinition {
  std::string name;
  double a = 0.0;
  double b = 1.0;

  std::function<State<M>(const State<M>&)> flux;
  std::function<Matrix<M>(const State<M>&)> jacobian;
  /// Symmetric bilinear form F_UU(U)[v, w].
  std::function<State<M>(const State<M>&, const State<M>&, const State<M>&)> hessian;
  std::function<Eigensystem<M>(const State<M>&)> eigensystem;
  /// max_i |lambda_i(U)|
  std::function<double(const State<M>&)> max_speed;

  std::function<State<M>(double x)> initial;
  std::function<State<M>(double t, double x)> exact;  // empty when unknown

  BoundaryCondition<M> left;
  BoundaryCondition<M> right;

  /// Smooth problems use Lagrangian extrapolation at the boundary; nonsmooth
  /// ones the WENO-type variant with a reduced Taylor depth.
  bool smooth = true;
  int nonsmooth_taylor_depth = 3;

  State<M> hessian_action(const State<M>& u, const State<M>& v) const { return hessian(u, v, v); }
  const BoundaryCondition<M>& boundary(Side side) const { return side == Side::left ? left : right; }
  bool has_exact() const { return static_cast<bool>(exact); }
};

}  // namespace rkbc
