#include "rkbc/jet.hpp"
#include "rkbc/problems.hpp"
#include "rkbc/vortex2d.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

namespace rkbc {
namespace {

using std::numbers::pi;

TEST(Problems, AdvectionExamples) {
  const auto smooth = make_linear_advection(AdvectionVariant::smooth);
  EXPECT_NEAR(smooth.exact(1.0, 0.0)(0), 0.25, 1e-15);
  EXPECT_NEAR(smooth.left.residual(smooth.exact(0.37, -1.0), 0.37)(0), 0.0, 1e-15);
  const auto step = make_linear_advection(AdvectionVariant::step);
  EXPECT_EQ(step.left.data(2.0, 0)(0), -1.0);
  EXPECT_EQ(step.left.data(0.5, 0)(0), 0.25);
  EXPECT_EQ(step.exact(1.5, 0.0)(0), 0.25);
  EXPECT_EQ(step.exact(2.5, -0.7)(0), -1.0);
}

TEST(Problems, AdvectionDataDerivatives) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const double t = 0.3, h = 1e-4;
  for (int k = 0; k < 3; ++k) {
    const double fd = (p.left.data(t + h, k)(0) - p.left.data(t - h, k)(0)) / (2 * h);
    EXPECT_NEAR(p.left.data(t, k + 1)(0), fd, 1e-6);
  }
  EXPECT_THROW(p.left.data(t, 4), InvalidArgument);
}

TEST(Problems, BurgersExamples) {
  const auto p = make_burgers();
  EXPECT_EQ(p.exact(0.4, 1.0)(0), 0.0);
  EXPECT_EQ(p.exact(0.4, -0.5)(0), 1.0);
  EXPECT_EQ(p.exact(0.4, 1.7)(0), -1.0);
  EXPECT_THROW(p.exact(1.0, 0.0), InvalidArgument);
  for (double t : {0.0, 0.4, 0.9}) {
    EXPECT_EQ(p.left.residual(p.exact(t, p.a), t)(0), 0.0);
    EXPECT_EQ(p.right.residual(p.exact(t, p.b), t)(0), 0.0);
  }
}

TEST(Problems, EulerStateExamples) {
  const auto p = make_euler_smooth();
  const State<3> u = euler::conservative1d(1.0, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(u(2), 5.5);
  const State<3> f = p.flux(u);
  EXPECT_DOUBLE_EQ(f(0), 1.0);
  EXPECT_DOUBLE_EQ(f(1), 3.0);
  EXPECT_DOUBLE_EQ(f(2), 7.5);
  const auto es = p.eigensystem(u);
  EXPECT_NEAR(es.eigenvalues(0), 1.0 - std::sqrt(2.8), 1e-14);
  EXPECT_NEAR(es.eigenvalues(1), 1.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues(2), 1.0 + std::sqrt(2.8), 1e-14);
}

TEST(Problems, EulerBoundaryCountsMatchCharacteristics) {
  const auto p = make_euler_smooth();
  for (double t : {0.0, 1.0, 2.0}) {
    for (Side side : {Side::left, Side::right}) {
      const double x = side == Side::left ? p.a : p.b;
      const auto lam = p.eigensystem(p.exact(t, x)).eigenvalues;
      int incoming = 0;
      for (int m = 0; m < 3; ++m) incoming += side == Side::left ? lam(m) > 0.0 : lam(m) < 0.0;
      EXPECT_EQ(incoming, p.boundary(side).rows);
      EXPECT_LT(p.boundary(side).residual(p.exact(t, x), t).cwiseAbs().maxCoeff(), 1e-15);
    }
  }
  EXPECT_EQ(p.left.rows, 2);
  EXPECT_EQ(p.right.rows, 1);
}

TEST(Problems, BlastWaveData) {
  const auto p = make_blast_wave();
  EXPECT_DOUBLE_EQ(euler::pressure1d<double>(p.initial(0.05)), 1000.0);
  EXPECT_DOUBLE_EQ(euler::pressure1d<double>(p.initial(0.5)), 0.01);
  EXPECT_DOUBLE_EQ(euler::pressure1d<double>(p.initial(0.95)), 100.0);
  const State<3> wall = euler::conservative1d(2.0, 0.0, 5.0);
  EXPECT_EQ(p.left.residual(wall, 0.01)(0), 0.0);
  EXPECT_EQ(p.right.residual(wall, 0.02)(0), 0.0);
  EXPECT_FALSE(p.smooth);
}

// Jacobian, eigensystem and Hessian checked against finite differences of
// the flux on random physical states.
template <int M>
void check_flux_derivatives(const ProblemDefinition<M>& p, const State<M>& u, double tol) {
  const double h = 1e-6;
  const Matrix<M> a = p.jacobian(u);
  for (int c = 0; c < M; ++c) {
    State<M> e = State<M>::Zero();
    e(c) = h;
    const State<M> fd = (p.flux(u + e) - p.flux(u - e)) / (2 * h);
    EXPECT_LT((a.col(c) - fd).cwiseAbs().maxCoeff(), tol);
  }
  const auto es = p.eigensystem(u);
  EXPECT_LT((es.left * es.right - Matrix<M>::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((a * es.right - es.right * es.eigenvalues.asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff(), 1e-11);
  for (int m = 1; m < M; ++m) EXPECT_LE(es.eigenvalues(m - 1), es.eigenvalues(m));
  EXPECT_NEAR(p.max_speed(u), es.eigenvalues.cwiseAbs().maxCoeff(), 1e-12);

  const State<M> v = State<M>::LinSpaced(0.3, 1.1);
  const State<M> w = State<M>::LinSpaced(-0.5, 0.7);
  const State<M> fd = ((p.jacobian(u + h * w) - p.jacobian(u - h * w)) * v) / (2 * h);
  EXPECT_LT((p.hessian(u, v, w) - fd).cwiseAbs().maxCoeff(), tol);
  EXPECT_LT((p.hessian(u, v, w) - p.hessian(u, w, v)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Problems, EulerDerivatives1D) {
  const auto p = make_euler_smooth();
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> rho(0.5, 2.0), vel(-1.5, 1.5), pr(0.5, 3.0);
  for (int trial = 0; trial < 20; ++trial) check_flux_derivatives(p, euler::conservative1d(rho(rng), vel(rng), pr(rng)), 1e-7);
}

TEST(Problems, EulerDerivatives2D) {
  const auto v = make_euler2d_vortex();
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> rho(0.5, 2.0), vel(-1.5, 1.5), pr(0.5, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const State<4> u = euler::conservative2d(rho(rng), vel(rng), vel(rng), pr(rng));
    check_flux_derivatives(v.x_line, u, 1e-7);
    check_flux_derivatives(v.y_line, u, 1e-7);
  }
}

TEST(Problems, EulerRejectsNonphysicalStates) {
  const auto p = make_euler_smooth();
  EXPECT_THROW(p.eigensystem(State<3>(-1.0, 0.0, 1.0)), HyperbolicityError);
  EXPECT_THROW(p.max_speed(State<3>(1.0, 0.0, -1.0)), HyperbolicityError);
}

TEST(Jet, MatchesClosedFormDerivatives) {
  const double x = 0.4;
  const auto j = Jet<3>::variable(x);
  const auto e = exp(2.0 * j);
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(e.derivative(k), std::pow(2.0, k) * std::exp(2 * x), 1e-12);
  const auto p = pow(1.0 + j, 2.5);
  EXPECT_NEAR(p.derivative(1), 2.5 * std::pow(1 + x, 1.5), 1e-12);
  EXPECT_NEAR(p.derivative(2), 2.5 * 1.5 * std::pow(1 + x, 0.5), 1e-12);
  EXPECT_NEAR(p.derivative(3), 2.5 * 1.5 * 0.5 * std::pow(1 + x, -0.5), 1e-12);
  const auto q = 1.0 / (1.0 - j);
  EXPECT_NEAR(q.derivative(3), 6.0 / std::pow(1 - x, 4), 1e-10);
  const auto r = (j * j - 3.0) * (j + 1.0);
  EXPECT_NEAR(r.derivative(1), 3 * x * x + 2 * x - 3, 1e-12);
}

TEST(Vortex, FarFieldIsMeanFlow) {
  const auto v = make_euler2d_vortex(1.0);
  const State<4> far = v.initial(40.0, -35.0);
  const State<4> mean = euler::conservative2d(1.0, 1.0, 1.0, 1.0);
  EXPECT_LT((far - mean).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Vortex, CentreTemperatureDip) {
  const auto v = make_euler2d_vortex(1.0);
  const State<4> c = v.initial(0.0, 0.0);
  const double g = euler::kGamma;
  const double dT = -(g - 1.0) / (8.0 * g * pi * pi) * std::exp(1.0);
  const double rho = c(0);
  EXPECT_NEAR(c(1) / rho, 1.0, 1e-15);
  EXPECT_NEAR(c(2) / rho, 1.0, 1e-15);
  EXPECT_NEAR(euler::pressure2d<double>(c) / rho, 1.0 + dT, 1e-14);
  EXPECT_NEAR(rho, std::pow(1.0 + dT, 1.0 / (g - 1.0)), 1e-14);
}

TEST(Vortex, ExactSolutionTranslates) {
  const auto v = make_euler2d_vortex(1.0);
  EXPECT_EQ(v.exact(1.0, 0.5, 0.5), v.initial(-0.5, -0.5));
}

TEST(Vortex, TangentialDerivativesMatchFiniteDifferences) {
  const auto v = make_euler2d_vortex(1.0);
  const double h = 1e-5, t = 0.3, x = 0.2, y = -0.1;
  const State<4> fdx = (v.exact(t, x + h, y) - v.exact(t, x - h, y)) / (2 * h);
  const State<4> fdy = (v.exact(t, x, y + h) - v.exact(t, x, y - h)) / (2 * h);
  EXPECT_LT((v.exact_dx(t, x, y) - fdx).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT((v.exact_dy(t, x, y) - fdy).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Vortex, EdgeConditionsHoldOnExactSolution) {
  const auto v = make_euler2d_vortex(1.0);
  for (Edge e : {Edge::left, Edge::right, Edge::bottom, Edge::top}) {
    const auto bc = v.edge_condition(e, 0.3);
    EXPECT_EQ(bc.rows, (e == Edge::left || e == Edge::bottom) ? 3 : 1);
    for (double t : {0.0, 0.5, 1.0}) {
      const double x = e == Edge::left ? v.a : e == Edge::right ? v.b : 0.3;
      const double y = e == Edge::bottom ? v.a : e == Edge::top ? v.b : 0.3;
      EXPECT_LT(bc.residual(v.exact(t, x, y), t).cwiseAbs().maxCoeff(), 1e-14);
      // data derivatives against finite differences in t
      const double h = 1e-5;
      for (int k = 0; k < 3; ++k) {
        const DynVector fd = (bc.data(t + h, k) - bc.data(t - h, k)) / (2 * h);
        EXPECT_LT((bc.data(t, k + 1) - fd).cwiseAbs().maxCoeff(), 1e-6);
      }
    }
  }
}

}  // namespace
}  // namespace rkbc
