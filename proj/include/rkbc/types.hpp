// Common vocabulary types: small fixed-size state vectors and matrices,
// boundary sides, and the exception hierarchy used throughout the library.
#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace rkbc {

template <int M>
using State = Eigen::Matrix<double, M, 1>;

template <int M>
using Matrix = Eigen::Matrix<double, M, M>;

using DynVector = Eigen::VectorXd;
using DynMatrix = Eigen::MatrixXd;

enum class Side { left, right };

inline const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

/// Raised for malformed inputs: bad grid dimensions, unknown scheme names, etc.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state left the hyperbolic region (nonpositive density or pressure).
class HyperbolicityError : public std::runtime_error {
 public:
  HyperbolicityError(const std::string& what, double x)
      : std::runtime_error(what + " at x = " + std::to_string(x)), x_(x) {}
  explicit HyperbolicityError(const std::string& what) : std::runtime_error(what), x_(0.0) {}
  double location() const { return x_; }

 private:
  double x_;
};

/// Newton or linear solve failure at a boundary.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Non-finite or runaway values detected during time stepping.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(double time, double x)
      : std::runtime_error("solution blew up at t = " + std::to_string(time) +
                           ", x = " + std::to_string(x)),
        time_(time),
        x_(x) {}
  double time() const { return time_; }
  double location() const { return x_; }

 private:
  double time_;
  double x_;
};

}  // namespace rkbc
