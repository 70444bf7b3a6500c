// Pointwise WENO interface reconstruction and boundary extrapolation.
//
// Reconstruction treats the stencil values as cell averages of a primitive
// function and returns its value at x_{j+1/2} (finite-difference WENO).
// Orders 5 (nonlinear or ideal weights) and 7
// (ideal weights only) are supported.
//
// Boundary extrapolation returns the derivative stack d^k/dx^k, k = 0..K-1, at
// a point x_b lying outside the sample nodes x0 + j dx, j = 0..K-1.
#pragma once

#include "rkbc/types.hpp"

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace rkbc {

enum class WeightMode { nonlinear, ideal };

struct ReconstructionConfig {
  int order = 5;
  WeightMode weights = WeightMode::nonlinear;
  double epsilon = 1e-6;

  int half_width() const { return (order + 1) / 2; }  // r
  int stencil_size() const { return order; }          // 2r - 1
  int ghosts() const { return half_width(); }

  void validate() const {
    if (order != 5 && order != 7) throw InvalidArgument("WENO order must be 5 or 7");
    if (order == 7 && weights != WeightMode::ideal)
      throw InvalidArgument("seventh-order reconstruction is available with ideal weights only");
    if (!(epsilon > 0.0)) throw InvalidArgument("WENO epsilon must be positive");
  }
};

namespace detail {

/// Nonlinear weights of the three WENO5 candidates, exposed for tests.
inline std::array<double, 3> weno5_weights(double vm2, double vm1, double v0, double vp1, double vp2,
                                           double eps) {
  const double b0 = 13.0 / 12.0 * (vm2 - 2.0 * vm1 + v0) * (vm2 - 2.0 * vm1 + v0) +
                    0.25 * (vm2 - 4.0 * vm1 + 3.0 * v0) * (vm2 - 4.0 * vm1 + 3.0 * v0);
  const double b1 = 13.0 / 12.0 * (vm1 - 2.0 * v0 + vp1) * (vm1 - 2.0 * v0 + vp1) +
                    0.25 * (vm1 - vp1) * (vm1 - vp1);
  const double b2 = 13.0 / 12.0 * (v0 - 2.0 * vp1 + vp2) * (v0 - 2.0 * vp1 + vp2) +
                    0.25 * (3.0 * v0 - 4.0 * vp1 + vp2) * (3.0 * v0 - 4.0 * vp1 + vp2);
  const double a0 = 0.1 / ((eps + b0) * (eps + b0));
  const double a1 = 0.6 / ((eps + b1) * (eps + b1));
  const double a2 = 0.3 / ((eps + b2) * (eps + b2));
  const double sum = a0 + a1 + a2;
  return {a0 / sum, a1 / sum, a2 / sum};
}

inline double weno5_nonlinear(double vm2, double vm1, double v0, double vp1, double vp2, double eps) {
  const auto w = weno5_weights(vm2, vm1, v0, vp1, vp2, eps);
  const double q0 = (2.0 * vm2 - 7.0 * vm1 + 11.0 * v0) / 6.0;
  const double q1 = (-vm1 + 5.0 * v0 + 2.0 * vp1) / 6.0;
  const double q2 = (2.0 * v0 + 5.0 * vp1 - vp2) / 6.0;
  return w[0] * q0 + w[1] * q1 + w[2] * q2;
}

inline double weno5_ideal(double vm2, double vm1, double v0, double vp1, double vp2) {
  return (2.0 * vm2 - 13.0 * vm1 + 47.0 * v0 + 27.0 * vp1 - 3.0 * vp2) / 60.0;
}

inline double weno7_ideal(const double* v) {
  return (-3.0 * v[0] + 25.0 * v[1] - 101.0 * v[2] + 319.0 * v[3] + 214.0 * v[4] - 38.0 * v[5] +
          4.0 * v[6]) /
         420.0;
}

}  // namespace detail

/// Left-biased value at x_{j+1/2} from the stencil v_{j-r+1} .. v_{j+r-1}.
inline double weno_reconstruct_left(std::span<const double> stencil, const ReconstructionConfig& cfg) {
  if (static_cast<int>(stencil.size()) != cfg.stencil_size())
    throw InvalidArgument("WENO stencil length does not match the reconstruction order");
  const double* v = stencil.data();
  if (cfg.order == 5) {
    return cfg.weights == WeightMode::ideal ? detail::weno5_ideal(v[0], v[1], v[2], v[3], v[4])
                                            : detail::weno5_nonlinear(v[0], v[1], v[2], v[3], v[4], cfg.epsilon);
  }
  if (cfg.weights != WeightMode::ideal)
    throw InvalidArgument("seventh-order reconstruction is available with ideal weights only");
  return detail::weno7_ideal(v);
}

/// Right-biased value at x_{j-1/2}: the mirror image of weno_reconstruct_left.
inline double weno_reconstruct_right(std::span<const double> stencil, const ReconstructionConfig& cfg) {
  std::array<double, 7> reversed{};
  const std::size_t n = stencil.size();
  if (n > reversed.size()) throw InvalidArgument("WENO stencil too long");
  for (std::size_t i = 0; i < n; ++i) reversed[i] = stencil[n - 1 - i];
  return weno_reconstruct_left(std::span<const double>(reversed.data(), n), cfg);
}

// ---------------------------------------------------------------------------
// Boundary extrapolation

namespace detail {

/// Monomial coefficients c (p(s) = sum c_i s^i) of the polynomial through
/// (nodes[i], values[i]).
inline std::vector<double> interpolating_coefficients(std::span<const double> nodes,
                                                      std::span<const double> values) {
  const int n = static_cast<int>(nodes.size());
  DynMatrix vander(n, n);
  DynVector rhs(n);
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) {
      vander(i, j) = p;
      p *= nodes[i];
    }
    rhs(i) = values[i];
  }
  const DynVector c = vander.fullPivLu().solve(rhs);
  return {c.data(), c.data() + n};
}

/// k-th derivative at s of a polynomial given by monomial coefficients.
inline double poly_derivative(const std::vector<double>& c, int k, double s) {
  double result = 0.0;
  double power = 1.0;
  for (std::size_t i = k; i < c.size(); ++i) {
    double factor = 1.0;
    for (std::size_t q = i - k + 1; q <= i; ++q) factor *= static_cast<double>(q);
    result += factor * c[i] * power;
    power *= s;
  }
  return result;
}

/// Exact value of int_lo^hi (d^l p / ds^l)^2 ds.
inline double squared_derivative_integral(const std::vector<double>& c, int l, double lo, double hi) {
  const int deg = static_cast<int>(c.size()) - 1;
  if (l > deg) return 0.0;
  std::vector<double> d(deg - l + 1);
  for (int i = l; i <= deg; ++i) {
    double factor = 1.0;
    for (int q = i - l + 1; q <= i; ++q) factor *= q;
    d[i - l] = factor * c[i];
  }
  double total = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      const int e = static_cast<int>(i + j) + 1;
      total += d[i] * d[j] * (std::pow(hi, e) - std::pow(lo, e)) / e;
    }
  }
  return total;
}

}  // namespace detail

/// Derivatives at xb of the degree-(K-1) interpolant through the K samples
/// at x0, x0 + dx, ..., x0 + (K-1) dx. Output k has formal order K - k.
inline std::vector<double> lagrange_boundary_derivatives(std::span<const double> values, double x0,
                                                         double dx, double xb) {
  const int K = static_cast<int>(values.size());
  const double sb = (xb - x0) / dx;
  std::vector<double> nodes(K);
  for (int i = 0; i < K; ++i) nodes[i] = i;
  const auto c = detail::interpolating_coefficients(nodes, values);
  std::vector<double> out(K);
  double scale = 1.0;
  for (int k = 0; k < K; ++k) {
    out[k] = detail::poly_derivative(c, k, sb) / scale;
    scale *= dx;
  }
  return out;
}

/// Nonlinear weights of the WENO-type extrapolation, exposed for tests.
///
/// Candidate r (r = 0..K-1) interpolates the first r+1 samples. Linear
/// weights are dx^{K-1-r} for r < K-1, with the last candidate taking the
/// remainder; smoothness indicators are
///   beta_0 = dx^2,
///   beta_r = sum_{l=1}^{r} int_{x0-dx}^{x0} dx^{2l-1} (p_r^{(l)})^2 dx.
inline std::vector<double> weno_extrapolation_weights(std::span<const double> values, double dx,
                                                      double eps = 1e-6) {
  const int K = static_cast<int>(values.size());
  std::vector<double> linear(K);
  double rest = 1.0;
  for (int r = 0; r < K - 1; ++r) {
    linear[r] = std::pow(dx, K - 1 - r);
    rest -= linear[r];
  }
  linear[K - 1] = rest;

  std::vector<double> alpha(K);
  double sum = 0.0;
  for (int r = 0; r < K; ++r) {
    double beta = 0.0;
    if (r == 0) {
      beta = dx * dx;
    } else {
      std::vector<double> nodes(r + 1);
      for (int i = 0; i <= r; ++i) nodes[i] = i;
      const auto c = detail::interpolating_coefficients(nodes, values.subspan(0, r + 1));
      // In s = (x - x0)/dx the dx^{2l-1} scaling cancels exactly.
      for (int l = 1; l <= r; ++l) beta += detail::squared_derivative_integral(c, l, -1.0, 0.0);
    }
    alpha[r] = linear[r] / ((eps + beta) * (eps + beta));
    sum += alpha[r];
  }
  for (auto& a : alpha) a /= sum;
  return alpha;
}

/// WENO-type counterpart of lagrange_boundary_derivatives: a convex
/// combination of the candidate extrapolants, weighted by smoothness.
inline std::vector<double> weno_boundary_derivatives(std::span<const double> values, double x0, double dx,
                                                     double xb, double eps = 1e-6) {
  const int K = static_cast<int>(values.size());
  const double sb = (xb - x0) / dx;
  const auto w = weno_extrapolation_weights(values, dx, eps);
  std::vector<double> out(K, 0.0);
  for (int r = 0; r < K; ++r) {
    std::vector<double> nodes(r + 1);
    for (int i = 0; i <= r; ++i) nodes[i] = i;
    const auto c = detail::interpolating_coefficients(nodes, values.subspan(0, r + 1));
    double scale = 1.0;
    for (int k = 0; k < K; ++k) {
      out[k] += w[r] * detail::poly_derivative(c, k, sb) / scale;
      scale *= dx;
    }
  }
  return out;
}

}  // namespace rkbc
