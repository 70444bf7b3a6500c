// Uniform 1D mesh with ghost layers, and M-component point-value storage.
//
// Points sit at x_j = a + (j + 1/2) dx, j = -G .. N+G-1, so the physical
// boundaries x = a and x = b fall halfway between the outermost interior
// point and the first ghost point. Interior indices run 0 .. N-1.
#pragma once

#include "rkbc/types.hpp"

#include <span>
#include <vector>

namespace rkbc {

class Grid1D {
 public:
  Grid1D() = default;
  Grid1D(double a, double b, int n_interior, int n_ghost) : a_(a), b_(b), n_(n_interior), g_(n_ghost) {
    if (!(b > a)) throw InvalidArgument("grid requires b > a");
    if (n_ghost < 3) throw InvalidArgument("grid requires at least 3 ghost points");
    if (n_interior < 2 * n_ghost) throw InvalidArgument("grid requires n_interior >= 2 * n_ghost");
    dx_ = (b - a) / n_interior;
  }

  double a() const { return a_; }
  double b() const { return b_; }
  double dx() const { return dx_; }
  int size() const { return n_; }
  int ghosts() const { return g_; }
  int stored() const { return n_ + 2 * g_; }

  /// Coordinate of point j; computed from (a, dx, j), never accumulated.
  double x(int j) const { return a_ + (j + 0.5) * dx_; }

 private:
  double a_ = 0.0;
  double b_ = 1.0;
  int n_ = 0;
  int g_ = 0;
  double dx_ = 0.0;
};

inline Grid1D build_grid(double a, double b, int n_interior, int n_ghost) {
  return Grid1D(a, b, n_interior, n_ghost);
}

/// Point values of an M-component state on a Grid1D, ghosts included.
template <int M>
class Field {
 public:
  Field() = default;
  explicit Field(const Grid1D& grid) : grid_(grid), data_(grid.stored(), State<M>::Zero()) {}

  const Grid1D& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  int ghosts() const { return grid_.ghosts(); }

  State<M>& operator[](int j) { return data_[j + grid_.ghosts()]; }
  const State<M>& operator[](int j) const { return data_[j + grid_.ghosts()]; }

  /// Whole storage, ghosts first: index 0 is point -G.
  std::span<State<M>> all() { return data_; }
  std::span<const State<M>> all() const { return data_; }

  std::span<State<M>> interior() { return std::span<State<M>>(data_).subspan(grid_.ghosts(), grid_.size()); }
  std::span<const State<M>> interior() const {
    return std::span<const State<M>>(data_).subspan(grid_.ghosts(), grid_.size());
  }

 private:
  Grid1D grid_;
  std::vector<State<M>> data_;
};

template <int M>
void fill_periodic_ghosts(Field<M>& f) {
  const int n = f.size();
  const int g = f.ghosts();
  for (int m = 1; m <= g; ++m) {
    f[-m] = f[n - m];
    f[n - 1 + m] = f[m - 1];
  }
}

}  // namespace rkbc
