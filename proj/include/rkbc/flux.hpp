// Finite-difference WENO flux operators with global Lax-Friedrichs splitting
// and local characteristic decomposition.
//
//   L(U)_j  = -(Fhat_{j+1/2}  - Fhat_{j-1/2})  / dx     upwind
//   Lt(U)_j = -(Ftil_{j+1/2} - Ftil_{j-1/2}) / dx       downwind
//
// The downwind operator swaps the roles of F+ and F- and negates the flux
// bracket; both approximate -dF/dx, but backward-in-time Euler with Lt is the
// strongly stable combination.
#pragma once

#include "rkbc/grid.hpp"
#include "rkbc/parallel.hpp"
#include "rkbc/problem.hpp"
#include "rkbc/weno.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <vector>

namespace rkbc {

enum class Bias { upwind, downwind };

template <int M>
struct SplitFluxPair {
  State<M> plus;
  State<M> minus;
};

/// F+- = (U +- F/alpha) / 2
template <int M>
SplitFluxPair<M> lf_split(const State<M>& u, const State<M>& f, double alpha) {
  return {0.5 * (u + f / alpha), 0.5 * (u - f / alpha)};
}

template <int M>
SplitFluxPair<M> downwind_split(const State<M>& u, const State<M>& f, double alpha) {
  const auto s = lf_split<M>(u, f, alpha);
  return {s.minus, s.plus};
}

/// Largest characteristic speed over the interior of `line`.
template <int M>
double global_alpha(std::span<const State<M>> interior, const ProblemDefinition<M>& problem) {
  double alpha = 0.0;
  for (const auto& u : interior) alpha = std::max(alpha, problem.max_speed(u));
  if (!(alpha > 0.0)) throw InvalidArgument("degenerate problem: all wave speeds vanish");
  return alpha;
}

template <int M>
double global_alpha(const Field<M>& field, const ProblemDefinition<M>& problem) {
  return global_alpha<M>(field.interior(), problem);
}

/// Flux-difference operator along one grid line.
template <int M>
class SpatialOperator {
 public:
  SpatialOperator(const ProblemDefinition<M>& problem, ReconstructionConfig cfg, int threads = 1)
      : problem_(&problem), cfg_(cfg), threads_(threads) {
    cfg_.validate();
  }

  const ReconstructionConfig& config() const { return cfg_; }
  const ProblemDefinition<M>& problem() const { return *problem_; }

  /// `line` holds n + 2G points (ghosts first); writes the n interior values
  /// of L (or Lt) into `out`.
  void apply_line(std::span<const State<M>> line, int ghosts, double dx, double alpha, Bias bias,
                  std::span<State<M>> out) const {
    const int n = static_cast<int>(line.size()) - 2 * ghosts;
    const int r = cfg_.half_width();
    if (ghosts < r) throw InvalidArgument("not enough ghost points for the reconstruction stencil");
    if (static_cast<int>(out.size()) != n) throw InvalidArgument("output size does not match the line");

    // Split fluxes at every stored point; the downwind operator swaps them.
    std::vector<State<M>> fp(line.size()), fm(line.size());
    for (std::size_t k = 0; k < line.size(); ++k) {
      const State<M> f = problem_->flux(line[k]);
      const auto s = bias == Bias::upwind ? lf_split<M>(line[k], f, alpha) : downwind_split<M>(line[k], f, alpha);
      fp[k] = s.plus;
      fm[k] = s.minus;
    }

    // fhat[h + 1] is the numerical flux at x_{h+1/2}, h = -1 .. n-1.
    std::vector<State<M>> fhat(n + 1);
    const double sign = bias == Bias::upwind ? alpha : -alpha;
    parallel_for(-1, n, threads_, [&](int h) {
      fhat[h + 1] = sign * interface_bracket(line, fp, fm, ghosts + h, r);
    });

    for (int j = 0; j < n; ++j) out[j] = -(fhat[j + 1] - fhat[j]) / dx;
  }

  void apply(const Field<M>& field, double alpha, Bias bias, std::span<State<M>> out) const {
    apply_line(field.all(), field.ghosts(), field.grid().dx(), alpha, bias, out);
  }

 private:
  /// (F+)^-_{j+1/2} - (F-)^+_{j+1/2} at the interface right of stored index s.
  State<M> interface_bracket(std::span<const State<M>> line, const std::vector<State<M>>& fp,
                             const std::vector<State<M>>& fm, int s, int r) const {
    const State<M> avg = 0.5 * (line[s] + line[s + 1]);
    Eigensystem<M> es;
    try {
      es = problem_->eigensystem(avg);
    } catch (const HyperbolicityError& e) {
      throw HyperbolicityError(std::string(e.what()) + " in the interface average", s);
    }

    // Project the 2r points s-r+1 .. s+r onto the characteristic fields.
    constexpr int kMaxPoints = 8;
    std::array<State<M>, kMaxPoints> vp, vm;
    const int width = 2 * r;
    for (int o = 0; o < width; ++o) {
      const int k = s - r + 1 + o;
      vp[o] = es.left * fp[k];
      vm[o] = es.left * fm[k];
    }

    State<M> bracket;
    std::array<double, 7> stencil{};
    const int len = 2 * r - 1;
    for (int m = 0; m < M; ++m) {
      for (int o = 0; o < len; ++o) stencil[o] = vp[o](m);
      const double left = weno_reconstruct_left(std::span<const double>(stencil.data(), len), cfg_);
      for (int o = 0; o < len; ++o) stencil[o] = vm[width - 1 - o](m);
      const double right = weno_reconstruct_left(std::span<const double>(stencil.data(), len), cfg_);
      bracket(m) = left - right;
    }
    return es.right * bracket;
  }

  const ProblemDefinition<M>* problem_;
  ReconstructionConfig cfg_;
  int threads_;
};

template <int M>
Field<M> semidiscrete(const Field<M>& field, const ProblemDefinition<M>& problem, double alpha,
                      const ReconstructionConfig& cfg, Bias bias) {
  Field<M> out(field.grid());
  SpatialOperator<M>(problem, cfg).apply(field, alpha, bias, out.interior());
  return out;
}

template <int M>
Field<M> semidiscrete_upwind(const Field<M>& field, const ProblemDefinition<M>& problem, double alpha,
                             const ReconstructionConfig& cfg) {
  return semidiscrete(field, problem, alpha, cfg, Bias::upwind);
}

template <int M>
Field<M> semidiscrete_downwind(const Field<M>& field, const ProblemDefinition<M>& problem, double alpha,
                               const ReconstructionConfig& cfg) {
  return semidiscrete(field, problem, alpha, cfg, Bias::downwind);
}

}  // namespace rkbc
