// Explicit Runge-Kutta schemes in Shu-Osher form.
//
//   U^(0) = U^n
//   U^(i) = sum_{k<i} alpha_ik U^(k) + dt beta_ik { L(U^(k))  if beta_ik > 0
//                                                  { Lt(U^(k)) if beta_ik < 0
//   U^{n+1} = U^(s)
//
// Lt is the downwind operator. Rows are indexed i = 1..s and stored 0-based.
#pragma once

#include "rkbc/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace rkbc {

struct RKTableau {
  std::string name;
  int stages = 0;
  int order = 0;  // classical order
  // alpha[i-1][k] and beta[i-1][k] for i = 1..stages, k = 0..i-1.
  std::vector<std::vector<double>> alpha;
  std::vector<std::vector<double>> beta;
  double ssp_coefficient = 0.0;

  double a(int i, int k) const { return alpha[i - 1][k]; }
  double b(int i, int k) const { return beta[i - 1][k]; }

  bool has_negative_beta() const {
    for (const auto& row : beta)
      if (std::any_of(row.begin(), row.end(), [](double v) { return v < 0.0; })) return true;
    return false;
  }
};

namespace detail {

inline RKTableau ssp33() {
  return {"SSP(3,3)", 3, 3,
          {{1.0}, {3.0 / 4.0, 1.0 / 4.0}, {1.0 / 3.0, 0.0, 2.0 / 3.0}},
          {{1.0}, {0.0, 1.0 / 4.0}, {0.0, 0.0, 2.0 / 3.0}},
          1.0};
}

inline RKTableau ssp33_star() {
  return {"SSP*(3,3)", 3, 3,
          {{1.0},
           {0.410802706918667, 0.589197293081333},
           {0.123062611901395, 0.251481201947289, 0.625456186151316}},
          {{0.767591879243998},
           {-0.315328821802221, 0.452263057441777},
           {-0.041647109531262, 0.0, 0.480095089312672}},
          1.3027756};
}

inline RKTableau ssp54() {
  return {"SSP(5,4)", 5, 4,
          {{1.0},
           {0.444370493651235, 0.555629506348765},
           {0.620101851488403, 0.0, 0.379898148511597},
           {0.178079954393132, 0.0, 0.0, 0.821920045606868},
           {0.0, 0.0, 0.517231671970585, 0.096059710526147, 0.386708617503269}},
          {{0.391752226571890},
           {0.0, 0.368410593050371},
           {0.0, 0.0, 0.251891774271694},
           {0.0, 0.0, 0.0, 0.544974750228521},
           {0.0, 0.0, 0.0, 0.063692468666290, 0.226007483236906}},
          1.5081800};
}

inline RKTableau ssp54_star() {
  return {"SSP*(5,4)", 5, 4,
          {{1.0},
           {0.210186660827794, 0.789813339172206},
           {0.331062996240662, 0.202036516631465, 0.466900487127873},
           {0.0, 0.0, 0.0, 1.0},
           {0.097315407775058, 0.435703937692290, 0.0, 0.0, 0.466980654532652}},
          {{0.416596471458169},
           {-0.103478898431154, 0.388840157514713},
           {-0.162988621767813, 0.0, 0.229864007043460},
           {0.0, 0.0, 0.0, 0.492319055945867},
           {-0.047910229684804, 0.202097732052527, 0.0, 0.0, 0.229903474984498}},
          2.0312031};
}

}  // namespace detail

/// Accepts the display names ("SSP(3,3)", "SSP*(5,4)", ...) and the CLI
/// identifiers ("ssp33", "ssp33s", "ssp54", "ssp54s").
inline RKTableau builtin_tableau(std::string_view name) {
  if (name == "SSP(3,3)" || name == "ssp33") return detail::ssp33();
  if (name == "SSP*(3,3)" || name == "ssp33s") return detail::ssp33_star();
  if (name == "SSP(5,4)" || name == "ssp54") return detail::ssp54();
  if (name == "SSP*(5,4)" || name == "ssp54s") return detail::ssp54_star();
  throw InvalidArgument("unknown RK scheme '" + std::string(name) + "'");
}

inline std::vector<std::string> builtin_scheme_ids() { return {"ssp33", "ssp33s", "ssp54", "ssp54s"}; }

inline std::string scheme_id(const RKTableau& t) {
  if (t.name == "SSP(3,3)") return "ssp33";
  if (t.name == "SSP*(3,3)") return "ssp33s";
  if (t.name == "SSP(5,4)") return "ssp54";
  if (t.name == "SSP*(5,4)") return "ssp54s";
  return t.name;
}

/// Butcher form (A, b) of a Shu-Osher tableau, obtained by forward
/// substitution. Used only for validation; the stepper never sees it.
struct ButcherForm {
  std::vector<std::vector<double>> a;  // s x s, strictly lower triangular
  std::vector<double> b;
  std::vector<double> c;
};

inline ButcherForm to_butcher(const RKTableau& t) {
  const int s = t.stages;
  // coef[i][j]: weight of dt*F(U^(j)) in U^(i).
  std::vector<std::vector<double>> coef(s + 1, std::vector<double>(s, 0.0));
  for (int i = 1; i <= s; ++i) {
    for (int k = 0; k < i; ++k) {
      for (int j = 0; j < s; ++j) coef[i][j] += t.a(i, k) * coef[k][j];
      coef[i][k] += t.b(i, k);
    }
  }
  ButcherForm form;
  form.a.assign(coef.begin(), coef.begin() + s);
  form.b = coef[s];
  form.c.resize(s);
  for (int i = 0; i < s; ++i) {
    double sum = 0.0;
    for (double v : form.a[i]) sum += v;
    form.c[i] = sum;
  }
  return form;
}

/// Residuals of the classical order conditions, in the order
/// [b] [bc] [bc^2, bAc] [bc^3, bcAc, bAc^2, bAAc], truncated at `order`.
inline std::vector<double> order_condition_residuals(const ButcherForm& f, int order) {
  const std::size_t s = f.b.size();
  auto dot = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double r = 0.0;
    for (std::size_t i = 0; i < s; ++i) r += x[i] * y[i];
    return r;
  };
  auto apply_a = [&](const std::vector<double>& x) {
    std::vector<double> y(s, 0.0);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) y[i] += f.a[i][j] * x[j];
    return y;
  };
  auto times = [&](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> z(s);
    for (std::size_t i = 0; i < s; ++i) z[i] = x[i] * y[i];
    return z;
  };
  const std::vector<double> ones(s, 1.0);
  const auto& c = f.c;
  const auto c2 = times(c, c);
  const auto ac = apply_a(c);

  std::vector<double> res;
  if (order >= 1) res.push_back(dot(f.b, ones) - 1.0);
  if (order >= 2) res.push_back(dot(f.b, c) - 0.5);
  if (order >= 3) {
    res.push_back(dot(f.b, c2) - 1.0 / 3.0);
    res.push_back(dot(f.b, ac) - 1.0 / 6.0);
  }
  if (order >= 4) {
    res.push_back(dot(f.b, times(c2, c)) - 0.25);
    res.push_back(dot(f.b, times(c, ac)) - 0.125);
    res.push_back(dot(f.b, apply_a(c2)) - 1.0 / 12.0);
    res.push_back(dot(f.b, apply_a(ac)) - 1.0 / 24.0);
  }
  return res;
}

struct TableauReport {
  std::vector<std::string> violations;
  std::vector<double> order_residuals;

  bool ok() const { return violations.empty(); }
};

inline TableauReport validate_tableau(const RKTableau& t, double row_sum_tol = 1e-12,
                                      double order_tol = 1e-10) {
  TableauReport report;
  if (t.stages < 1) {
    report.violations.push_back("stage count must be positive");
    return report;
  }
  if (static_cast<int>(t.alpha.size()) != t.stages || static_cast<int>(t.beta.size()) != t.stages) {
    report.violations.push_back("coefficient arrays do not have one row per stage");
    return report;
  }
  for (int i = 1; i <= t.stages; ++i) {
    if (static_cast<int>(t.alpha[i - 1].size()) != i || static_cast<int>(t.beta[i - 1].size()) != i) {
      report.violations.push_back("row " + std::to_string(i) + " is not lower-triangular of length " +
                                  std::to_string(i));
      return report;
    }
  }
  for (int i = 1; i <= t.stages; ++i) {
    double sum = 0.0;
    for (int k = 0; k < i; ++k) {
      const double a = t.a(i, k);
      sum += a;
      if (a < 0.0)
        report.violations.push_back("alpha_" + std::to_string(i) + std::to_string(k) + " is negative");
      if (a == 0.0 && t.b(i, k) != 0.0)
        report.violations.push_back("alpha_" + std::to_string(i) + std::to_string(k) +
                                    " is zero but beta is not");
    }
    if (std::abs(sum - 1.0) > row_sum_tol)
      report.violations.push_back("row " + std::to_string(i) + " alpha sum is " + std::to_string(sum));
  }
  if (t.ssp_coefficient <= 0.0) report.violations.push_back("SSP coefficient must be positive");

  report.order_residuals = order_condition_residuals(to_butcher(t), t.order);
  for (std::size_t q = 0; q < report.order_residuals.size(); ++q) {
    if (std::abs(report.order_residuals[q]) > order_tol)
      report.violations.push_back("order condition " + std::to_string(q) + " residual " +
                                  std::to_string(report.order_residuals[q]));
  }
  return report;
}

}  // namespace rkbc
