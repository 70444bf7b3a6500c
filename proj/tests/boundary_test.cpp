#include "rkbc/boundary.hpp"
#include "rkbc/problems.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace rkbc {
namespace {

using std::numbers::pi;

template <int M, class F>
Field<M> sample(const Grid1D& g, F&& f) {
  Field<M> u(g);
  for (int j = 0; j < g.size(); ++j) u[j] = f(g.x(j));
  return u;
}

template <int M>
State<M> exact_dx(const ProblemDefinition<M>& p, double t, double x) {
  const double h = 1e-5;
  return (p.exact(t, x + h) - p.exact(t, x - h)) / (2 * h);
}

TEST(CharDerivatives, ConstantField) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const Grid1D g(-1.0, 1.0, 40, 3);
  const auto u = sample<1>(g, [](double) { return State<1>(0.7); });
  const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
  for (Side side : {Side::left, Side::right}) {
    const auto cd = outgoing_char_derivatives(u, p, side, ex);
    ASSERT_EQ(cd.v.size(), 5u);
    EXPECT_NEAR(cd.v[0](0), 0.7, 1e-13);
    for (int k = 1; k < 5; ++k) EXPECT_NEAR(cd.v[k](0), 0.0, 1e-9 / std::pow(g.dx(), k));
  }
}

TEST(CharDerivatives, ScalarConvergence) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  std::vector<double> e0, e1;
  for (int n : {40, 80, 160}) {
    const Grid1D g(-1.0, 1.0, n, 3);
    const auto u = sample<1>(g, [&](double x) { return p.exact(0.2, x); });
    const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
    const auto cd = outgoing_char_derivatives(u, p, Side::right, ex);
    e0.push_back(std::abs(cd.v[0](0) - p.exact(0.2, 1.0)(0)));
    e1.push_back(std::abs(cd.v[1](0) - 0.5 * pi * std::cos(pi * 0.8)));
  }
  for (double o : test::halving_orders(e0)) EXPECT_GT(o, 4.6);
  for (double o : test::halving_orders(e1)) EXPECT_GT(o, 3.6);
}

TEST(CharDerivatives, OutgoingModesOrderedBySpeed) {
  const auto p = make_euler_smooth();
  const Grid1D g(p.a, p.b, 40, 3);
  const auto u = sample<3>(g, [&](double x) { return p.exact(0.0, x); });
  const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
  const auto left = outgoing_char_derivatives(u, p, Side::left, ex);
  const auto right = outgoing_char_derivatives(u, p, Side::right, ex);
  // subsonic flow to the right: u - c leaves on the left, u - c enters on the right
  EXPECT_EQ(left.outgoing(1)[0], 0);
  EXPECT_EQ(right.outgoing(2)[0], 2);
  EXPECT_EQ(right.outgoing(2)[1], 1);
}

TEST(BoundaryState, ScalarDataIsImposed) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const Grid1D g(-1.0, 1.0, 40, 3);
  const auto u = sample<1>(g, [](double x) { return State<1>(std::cos(x)); });
  const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
  const auto cd = outgoing_char_derivatives(u, p, Side::left, ex);
  EXPECT_EQ(solve_boundary_state(cd, p.left, detail::scalar(0.3))(0), 0.3);
  const auto cdr = outgoing_char_derivatives(u, p, Side::right, ex);
  EXPECT_EQ(solve_boundary_state(cdr, p.right, DynVector(0))(0), cdr.v[0](0));
}

// A smooth non-uniform Euler profile with boundary data taken from the
// profile itself; g' is chosen so that the profile's slope satisfies the
// differentiated condition.
struct EulerProfile {
  static State<3> u(double x) {
    return euler::conservative1d(1.0 + 0.2 * std::sin(x), 0.8 + 0.1 * std::cos(x), 2.0 + 0.3 * std::sin(2 * x));
  }
  static State<3> ux(double x) {
    const double r = 1.0 + 0.2 * std::sin(x), v = 0.8 + 0.1 * std::cos(x);
    const double rx = 0.2 * std::cos(x), vx = -0.1 * std::sin(x), px = 0.6 * std::cos(2 * x);
    return State<3>(rx, rx * v + r * vx, px / (euler::kGamma - 1.0) + 0.5 * rx * v * v + r * v * vx);
  }
};

ProblemDefinition<3> profile_problem() {
  auto p = make_euler_smooth();
  for (Side side : {Side::left, Side::right}) {
    auto& bc = side == Side::left ? p.left : p.right;
    const double xb = side == Side::left ? p.a : p.b;
    const State<3> ub = EulerProfile::u(xb), uxb = EulerProfile::ux(xb);
    const DynVector g = bc.constraint(ub);
    const DynVector gp = -bc.constraint_jacobian(ub) * p.jacobian(ub) * uxb;
    bc.data = [g, gp](double, int order) { return order == 0 ? g : gp; };
  }
  return p;
}

TEST(BoundaryState, EulerConvergence) {
  const auto p = profile_problem();
  std::vector<double> el, er;
  for (int n : {40, 80, 160}) {
    const Grid1D g(p.a, p.b, n, 3);
    const auto u = sample<3>(g, [](double x) { return EulerProfile::u(x); });
    const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
    const auto l = outgoing_char_derivatives(u, p, Side::left, ex);
    const auto r = outgoing_char_derivatives(u, p, Side::right, ex);
    const State<3> ul = solve_boundary_state(l, p.left, p.left.data(0.0, 0));
    const State<3> ur = solve_boundary_state(r, p.right, p.right.data(0.0, 0));
    EXPECT_LT(p.left.residual(ul, 0.0).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(p.right.residual(ur, 0.0).cwiseAbs().maxCoeff(), 1e-12);
    el.push_back((ul - EulerProfile::u(p.a)).cwiseAbs().maxCoeff());
    er.push_back((ur - EulerProfile::u(p.b)).cwiseAbs().maxCoeff());
  }
  for (double o : test::halving_orders(el)) EXPECT_GT(o, 4.5);
  for (double o : test::halving_orders(er)) EXPECT_GT(o, 4.5);
}

TEST(BoundaryState, DensityWaveIsRecoveredExactly) {
  // Entropy-wave errors lie along an eigenvector the outgoing rows annihilate.
  const auto p = make_euler_smooth();
  const Grid1D g(p.a, p.b, 40, 3);
  const auto u = sample<3>(g, [&](double x) { return p.exact(0.3, x); });
  const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
  const auto l = outgoing_char_derivatives(u, p, Side::left, ex);
  EXPECT_LT((solve_boundary_state(l, p.left, p.left.data(0.3, 0)) - p.exact(0.3, p.a)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(BoundaryState, WallHasZeroVelocity) {
  const auto p = make_blast_wave();
  const Grid1D g(0.0, 1.0, 40, 3);
  const auto u = sample<3>(g, [](double x) { return euler::conservative1d(1.0 + x, 0.3 - x, 2.0 + x * x); });
  const Extrapolator ex(3, g.dx(), Extrapolation::weno);
  for (Side side : {Side::left, Side::right}) {
    const auto cd = outgoing_char_derivatives(u, p, side, ex);
    const State<3> w = solve_boundary_state(cd, p.boundary(side), p.boundary(side).data(0.0, 0));
    EXPECT_NEAR(w(1) / w(0), 0.0, 1e-12);
    EXPECT_GT(w(0), 0.0);
  }
}

TEST(BoundaryState, NewtonFailureIsReported) {
  auto p = make_scalar_problem("x", 0.0, 1.0, [](double u) { return u; }, [](double) { return 1.0; },
                               [](double) { return 0.0; });
  BoundaryCondition<1> bc;
  bc.rows = 1;
  bc.constraint = [](const State<1>& u) { return DynVector::Constant(1, u(0) * u(0)); };
  bc.constraint_jacobian = [](const State<1>& u) { return DynMatrix::Constant(1, 1, 2.0 * u(0)); };
  bc.data = [](double, int) { return DynVector::Constant(1, -1.0); };
  const Grid1D g(0.0, 1.0, 20, 3);
  const auto u = sample<1>(g, [](double) { return State<1>(0.5); });
  const Extrapolator ex(3, g.dx(), Extrapolation::lagrange);
  const auto cd = outgoing_char_derivatives(u, p, Side::left, ex);
  EXPECT_THROW(solve_boundary_state(cd, bc, bc.data(0.0, 0)), SolveError);
}

TEST(InverseLaxWendroff, AdvectionFirstDerivative) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const Grid1D g(-1.0, 1.0, 40, 3);
  const auto u = sample<1>(g, [](double x) { return State<1>(x * x * x); });
  const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
  const auto cd = outgoing_char_derivatives(u, p, Side::left, ex);
  const State<1> u0 = solve_boundary_state(cd, p.left, p.left.data(0.0, 0));
  EXPECT_NEAR(ilw_first_derivative(u0, cd, p, p.left, p.left.data(0.0, 1))(0), -pi / 2, 1e-12);
}

TEST(InverseLaxWendroff, BurgersFirstDerivative) {
  auto p = make_scalar_problem("b", 0.0, 1.0, [](double u) { return 0.5 * u * u; }, [](double u) { return u; },
                               [](double) { return 1.0; });
  p.left = detail::scalar_dirichlet([](double t, int order) { return detail::scalar(order == 0 ? 1.0 + t : order == 1 ? 1.0 : 0.0); });
  const Grid1D g(0.0, 1.0, 20, 3);
  const auto u = sample<1>(g, [](double) { return State<1>(1.0); });
  const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
  const auto cd = outgoing_char_derivatives(u, p, Side::left, ex);
  const auto bd = boundary_derivatives_from_data(cd, p, p.left, p.left.data(0.0, 0), p.left.data(0.0, 1), 0, {});
  EXPECT_NEAR(bd.d[0](0), 1.0, 1e-14);
  EXPECT_NEAR(bd.d[1](0), -1.0, 1e-14);
  for (int k = 2; k < 5; ++k) EXPECT_NEAR(bd.d[k](0), 0.0, 1e-6);
}

TEST(InverseLaxWendroff, EulerConvergence) {
  const auto p = profile_problem();
  std::vector<double> el, er;
  for (int n : {40, 80, 160}) {
    const Grid1D g(p.a, p.b, n, 3);
    const auto u = sample<3>(g, [](double x) { return EulerProfile::u(x); });
    const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
    for (Side side : {Side::left, Side::right}) {
      const auto cd = outgoing_char_derivatives(u, p, side, ex);
      const auto& bc = p.boundary(side);
      const auto bd = boundary_derivatives_from_data(cd, p, bc, bc.data(0.0, 0), bc.data(0.0, 1), 0, {});
      const double xb = side == Side::left ? p.a : p.b;
      (side == Side::left ? el : er).push_back((bd.d[1] - EulerProfile::ux(xb)).cwiseAbs().maxCoeff());
    }
  }
  for (double o : test::halving_orders(el)) EXPECT_GT(o, 3.5);
  for (double o : test::halving_orders(er)) EXPECT_GT(o, 3.5);
}

TEST(HigherDerivatives, PolynomialsAreReproduced) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const Grid1D g(-1.0, 1.0, 40, 3);
  const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
  const auto c = sample<1>(g, [](double) { return State<1>(2.5); });
  for (const auto& d : higher_derivatives_by_extrapolation(outgoing_char_derivatives(c, p, Side::left, ex), 5))
    EXPECT_NEAR(d(0), 0.0, 1e-6);
  const auto q = sample<1>(g, [](double x) { return State<1>((x + 1.0) * (x + 1.0)); });
  const auto d = higher_derivatives_by_extrapolation(outgoing_char_derivatives(q, p, Side::left, ex), 5);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_NEAR(d[0](0), 2.0, 1e-8);
  EXPECT_NEAR(d[1](0), 0.0, 1e-6);
}

TEST(HigherDerivatives, EulerSecondDerivativeConverges) {
  const auto p = make_euler_smooth();
  const double t = 0.1, h = 1e-4;
  std::vector<double> err;
  for (int n : {40, 80, 160}) {
    const Grid1D g(p.a, p.b, n, 3);
    const auto u = sample<3>(g, [&](double x) { return p.exact(t, x); });
    const Extrapolator ex(5, g.dx(), Extrapolation::lagrange);
    const auto d = higher_derivatives_by_extrapolation(outgoing_char_derivatives(u, p, Side::left, ex), 5);
    const State<3> uxx = (p.exact(t, p.a + h) - 2.0 * p.exact(t, p.a) + p.exact(t, p.a - h)) / (h * h);
    err.push_back((d[0] - uxx).cwiseAbs().maxCoeff());
  }
  for (double o : test::halving_orders(err)) EXPECT_GT(o, 2.6);
}

BoundaryDerivatives<1> advection_stack(double t, int stage) {
  BoundaryDerivatives<1> bd;
  bd.stage = stage;
  double f = 1.0;
  for (int k = 0; k < 5; ++k) {
    // d^k/dx^k sin(pi (x - t)) at x = -1
    const double phase = pi * (-1.0 - t) + 0.5 * pi * k;
    bd.d.push_back(State<1>(f * std::sin(phase)));
    f *= pi;
  }
  return bd;
}

TEST(StageRelation, StarredThirdOrderFormula) {
  const auto p = make_scalar_problem("lin", -1.0, 1.0, [](double u) { return u; }, [](double) { return 1.0; },
                                     [](double) { return 0.0; });
  const Grid1D g(-1.0, 1.0, 40, 3);
  const auto u = sample<1>(g, [](double x) { return State<1>(std::sin(pi * x)); });
  const auto cd = outgoing_char_derivatives(u, p, Side::left, Extrapolator(5, g.dx(), Extrapolation::lagrange));
  const auto tab = builtin_tableau("ssp33s");
  const double dt = 0.01;
  const std::vector<BoundaryDerivatives<1>> prev = {advection_stack(0.0, 0), advection_stack(0.3, 1)};
  const auto bd = stage_boundary_derivatives<1>(prev, {}, tab, 2, dt, p, cd);
  const double d0 = tab.a(2, 0) * prev[0].d[0](0) + tab.a(2, 1) * prev[1].d[0](0) -
                    dt * (tab.b(2, 0) * prev[0].d[1](0) + tab.b(2, 1) * prev[1].d[1](0));
  const double d1 = tab.a(2, 0) * prev[0].d[1](0) + tab.a(2, 1) * prev[1].d[1](0) -
                    dt * (tab.b(2, 0) * prev[0].d[2](0) + tab.b(2, 1) * prev[1].d[2](0));
  EXPECT_NEAR(bd.d[0](0), d0, 1e-15);
  EXPECT_NEAR(bd.d[1](0), d1, 1e-14);
  ASSERT_EQ(bd.depth(), 5);
  for (int k = 2; k < 5; ++k) EXPECT_EQ(bd.d[k](0), cd.v[k](0));
}

TEST(StageRelation, NonlinearTermsUseHessian) {
  const auto p = make_burgers();
  const Grid1D g(p.a, p.b, 40, 3);
  const auto u = sample<1>(g, [](double) { return State<1>(1.0); });
  const auto cd = outgoing_char_derivatives(u, p, Side::left, Extrapolator(3, g.dx(), Extrapolation::lagrange));
  BoundaryDerivatives<1> q;
  q.d = {State<1>(0.8), State<1>(-0.4), State<1>(1.5)};
  TangentialSource<1> ts;
  ts.t0(0) = 0.1;
  ts.t1(0) = -0.2;
  const double dt = 0.05;
  const auto bd = stage_boundary_derivatives<1>({q}, {ts}, builtin_tableau("ssp33"), 1, dt, p, cd);
  EXPECT_NEAR(bd.d[0](0), 0.8 - dt * (0.8 * -0.4 + 0.1), 1e-15);
  EXPECT_NEAR(bd.d[1](0), -0.4 - dt * (0.16 + 0.8 * 1.5 - 0.2), 1e-15);
}

TEST(StageRelation, FirstStageIsSecondOrderLocally) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const Grid1D g(-1.0, 1.0, 40, 3);
  const auto u = sample<1>(g, [](double x) { return State<1>(std::sin(pi * x)); });
  const auto cd = outgoing_char_derivatives(u, p, Side::left, Extrapolator(5, g.dx(), Extrapolation::lagrange));
  std::vector<double> err;
  for (double dt : {0.02, 0.01, 0.005}) {
    const auto bd = stage_boundary_derivatives<1>({advection_stack(0.3, 0)}, {}, builtin_tableau("ssp33"), 1, dt, p, cd);
    err.push_back(std::abs(bd.d[0](0) - std::sin(pi * (-1.3 - dt))));
  }
  for (double o : test::halving_orders(err)) EXPECT_NEAR(o, 2.0, 0.1);
}

TEST(StageRelation, RejectsBadInput) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const Grid1D g(-1.0, 1.0, 40, 3);
  const auto u = sample<1>(g, [](double x) { return State<1>(x); });
  const auto tab = builtin_tableau("ssp33");
  const auto cd5 = outgoing_char_derivatives(u, p, Side::left, Extrapolator(5, g.dx(), Extrapolation::lagrange));
  const auto cd2 = outgoing_char_derivatives(u, p, Side::left, Extrapolator(2, g.dx(), Extrapolation::lagrange));
  EXPECT_THROW(stage_boundary_derivatives<1>({}, {}, tab, 1, 0.1, p, cd5), InvalidArgument);
  EXPECT_THROW(stage_boundary_derivatives<1>({advection_stack(0, 0)}, {}, tab, 3, 0.1, p, cd5), InvalidArgument);
  EXPECT_THROW(stage_boundary_derivatives<1>({advection_stack(0, 0)}, {}, tab, 1, 0.1, p, cd2), InvalidArgument);
}

TEST(TanShu, StageData) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const double t = 0.2, dt = 0.05;
  const auto [g1, g1p] = tan_shu_stage_data(p.left, 1, t, dt);
  EXPECT_NEAR(g1(0), p.left.data(t, 0)(0) + dt * p.left.data(t, 1)(0), 1e-15);
  EXPECT_NEAR(g1p(0), p.left.data(t, 1)(0) + dt * p.left.data(t, 2)(0), 1e-14);
  const auto [g2, g2p] = tan_shu_stage_data(p.left, 2, t, dt);
  EXPECT_NEAR(g2(0), p.left.data(t, 0)(0) + 0.5 * dt * p.left.data(t, 1)(0) + 0.25 * dt * dt * p.left.data(t, 2)(0),
              1e-15);
  EXPECT_NEAR(g2p(0),
              p.left.data(t, 1)(0) + 0.5 * dt * p.left.data(t, 2)(0) + 0.25 * dt * dt * p.left.data(t, 3)(0), 1e-14);
  EXPECT_THROW(tan_shu_stage_data(p.left, 3, t, dt), InvalidArgument);
}

TEST(TaylorGhosts, Polynomials) {
  const Grid1D g(0.0, 1.0, 10, 3);
  Field<1> f(g);
  BoundaryDerivatives<1> c;
  c.d = {State<1>(1.25), State<1>(0.0), State<1>(0.0)};
  fill_ghosts_taylor(c, f);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(f[-m](0), 1.25);

  BoundaryDerivatives<1> q;
  q.d = {State<1>(0.0), State<1>(0.0), State<1>(2.0)};
  fill_ghosts_taylor(q, f);
  EXPECT_NEAR(f[-1](0), 0.0025, 1e-15);
  EXPECT_NEAR(f[-2](0), 0.0225, 1e-15);
  EXPECT_NEAR(f[-3](0), 0.0625, 1e-15);

  BoundaryDerivatives<1> r;
  r.side = Side::right;
  r.d = {State<1>(1.0), State<1>(2.0), State<1>(0.0)};
  fill_ghosts_taylor(r, f);
  EXPECT_NEAR(f[10](0), 1.1, 1e-14);
  EXPECT_NEAR(f[12](0), 1.5, 1e-14);
}

TEST(TaylorGhosts, SineConvergence) {
  std::vector<double> err;
  for (int n : {20, 40, 80}) {
    const Grid1D g(0.0, 1.0, n, 3);
    Field<1> f(g);
    BoundaryDerivatives<1> bd;
    bd.side = Side::right;
    for (int k = 0; k < 5; ++k) bd.d.push_back(State<1>(std::pow(3.0, k) * std::sin(3.0 + 0.5 * pi * k)));
    fill_ghosts_taylor(bd, f);
    double e = 0.0;
    for (int m = 1; m <= 3; ++m) e = std::max(e, std::abs(f[n - 1 + m](0) - std::sin(3.0 * g.x(n - 1 + m))));
    err.push_back(e);
  }
  for (double o : test::halving_orders(err)) EXPECT_GT(o, 4.7);
}

TEST(SideBoundaryTest, OutflowSideIsLagrangeExtrapolation) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const Grid1D g(-1.0, 1.0, 20, 3);
  auto u = sample<1>(g, [](double x) { return State<1>(std::exp(x) * std::cos(3 * x)); });
  BoundaryOptions opts;
  opts.extrapolation = Extrapolation::lagrange;
  SideBoundary<1> right(Side::right, p.right, opts, 5, g.dx());
  right.compute(u, p, builtin_tableau("ssp33"), 0, 0.0, 0.01);
  right.fill(u, 0);
  for (int m = 1; m <= 3; ++m) {
    const int j = 19 + m;
    double v = 0.0;
    for (int i = 15; i < 20; ++i) {
      double l = 1.0;
      for (int k = 15; k < 20; ++k)
        if (k != i) l *= (g.x(j) - g.x(k)) / (g.x(i) - g.x(k));
      v += l * u[i](0);
    }
    EXPECT_NEAR(u[j](0), v, 1e-11);
  }
}

TEST(SideBoundaryTest, StageZeroGhostsConverge) {
  const auto p = make_euler_smooth();
  std::vector<double> err;
  for (int n : {40, 80, 160}) {
    const Grid1D g(p.a, p.b, n, 3);
    auto u = sample<3>(g, [&](double x) { return p.exact(0.4, x); });
    BoundaryDriver<3> drv(p, g, ReconstructionConfig{});
    drv.apply(u, builtin_tableau("ssp33"), 0, 0.4, 0.01);
    double e = 0.0;
    for (int m = 1; m <= 3; ++m) {
      e = std::max(e, (u[-m] - p.exact(0.4, g.x(-m))).cwiseAbs().maxCoeff());
      e = std::max(e, (u[n - 1 + m] - p.exact(0.4, g.x(n - 1 + m))).cwiseAbs().maxCoeff());
    }
    err.push_back(e);
  }
  for (double o : test::halving_orders(err)) EXPECT_GT(o, 4.3);
}

TEST(SideBoundaryTest, ErrorPaths) {
  const auto p = make_linear_advection(AdvectionVariant::smooth);
  const Grid1D g(-1.0, 1.0, 20, 3);
  auto u = sample<1>(g, [](double x) { return State<1>(x); });
  BoundaryOptions ts;
  ts.method = BoundaryMethod::tan_shu;
  EXPECT_THROW(SideBoundary<1>(Side::left, p.left, {}, 2, g.dx()), InvalidArgument);

  SideBoundary<1> left(Side::left, p.left, ts, 5, g.dx());
  const auto ssp54 = builtin_tableau("ssp54");
  left.compute(u, p, ssp54, 0, 0.0, 0.01);
  EXPECT_THROW(left.compute(u, p, ssp54, 1, 0.0, 0.01), InvalidArgument);

  SideBoundary<1> rk(Side::left, p.left, {}, 5, g.dx());
  EXPECT_THROW(rk.compute(u, p, ssp54, 2, 0.0, 0.01), InvalidArgument);
  rk.compute(u, p, ssp54, 0, 0.0, 0.01);
  EXPECT_THROW(rk.compute(u, p, ssp54, 2, 0.0, 0.01), InvalidArgument);
  EXPECT_NO_THROW(rk.compute(u, p, ssp54, 1, 0.0, 0.01));

  BoundaryDriver<1> drv(p, g, ReconstructionConfig{}, ts);
  EXPECT_THROW(drv.apply(u, ssp54, 0, 0.0, 0.01), InvalidArgument);
  EXPECT_NO_THROW(drv.apply(u, builtin_tableau("ssp33"), 0, 0.0, 0.01));
}

TEST(SideBoundaryTest, DefaultsFollowSmoothness) {
  const ReconstructionConfig cfg;
  EXPECT_EQ(resolve_taylor_depth(make_euler_smooth(), cfg, {}), 5);
  EXPECT_EQ(resolve_taylor_depth(make_blast_wave(), cfg, {}), 3);
  EXPECT_EQ(resolve_extrapolation(make_euler_smooth(), {}), Extrapolation::lagrange);
  EXPECT_EQ(resolve_extrapolation(make_blast_wave(), {}), Extrapolation::weno);
  BoundaryOptions o;
  o.taylor_depth = 4;
  o.extrapolation = Extrapolation::weno;
  EXPECT_EQ(resolve_taylor_depth(make_euler_smooth(), cfg, o), 4);
  EXPECT_EQ(resolve_extrapolation(make_euler_smooth(), o), Extrapolation::weno);
}

}  // namespace
}  // namespace rkbc
