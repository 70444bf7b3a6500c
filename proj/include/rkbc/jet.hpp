// Truncated Taylor series in one variable: c[k] = f^(k)(s0) / k!.
#pragma once

#include <array>
#include <cmath>

namespace rkbc {

template <int N>
struct Jet {
  std::array<double, N + 1> c{};

  Jet() = default;
  Jet(double v) { c[0] = v; }  // NOLINT(google-explicit-constructor)

  static Jet variable(double v) {
    Jet j(v);
    if constexpr (N >= 1) j.c[1] = 1.0;
    return j;
  }

  /// k-th derivative at the expansion point.
  double derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return c[k] * f;
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c[k] += o.c[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= N; ++k) c[k] -= o.c[k];
    return *this;
  }
  Jet operator-() const {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c[k] = -c[k];
    return r;
  }
};

template <int N>
Jet<N> operator+(Jet<N> a, const Jet<N>& b) {
  return a += b;
}
template <int N>
Jet<N> operator-(Jet<N> a, const Jet<N>& b) {
  return a -= b;
}
template <int N>
Jet<N> operator+(Jet<N> a, double b) {
  a.c[0] += b;
  return a;
}
template <int N>
Jet<N> operator+(double a, Jet<N> b) {
  b.c[0] += a;
  return b;
}
template <int N>
Jet<N> operator-(Jet<N> a, double b) {
  a.c[0] -= b;
  return a;
}
template <int N>
Jet<N> operator-(double a, const Jet<N>& b) {
  return -b + a;
}

template <int N>
Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (int k = 0; k <= N; ++k)
    for (int j = 0; j <= k; ++j) r.c[k] += a.c[j] * b.c[k - j];
  return r;
}
template <int N>
Jet<N> operator*(Jet<N> a, double b) {
  for (auto& v : a.c) v *= b;
  return a;
}
template <int N>
Jet<N> operator*(double a, Jet<N> b) {
  return b * a;
}

template <int N>
Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
  Jet<N> r;
  for (int k = 0; k <= N; ++k) {
    double s = a.c[k];
    for (int j = 1; j <= k; ++j) s -= b.c[j] * r.c[k - j];
    r.c[k] = s / b.c[0];
  }
  return r;
}
template <int N>
Jet<N> operator/(Jet<N> a, double b) {
  for (auto& v : a.c) v /= b;
  return a;
}
template <int N>
Jet<N> operator/(double a, const Jet<N>& b) {
  return Jet<N>(a) / b;
}

template <int N>
Jet<N> exp(const Jet<N>& a) {
  Jet<N> r;
  r.c[0] = std::exp(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a.c[j] * r.c[k - j];
    r.c[k] = s / k;
  }
  return r;
}

template <int N>
Jet<N> pow(const Jet<N>& a, double p) {
  Jet<N> r;
  r.c[0] = std::pow(a.c[0], p);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += ((p + 1.0) * j - k) * a.c[j] * r.c[k - j];
    r.c[k] = s / (k * a.c[0]);
  }
  return r;
}

}  // namespace rkbc
