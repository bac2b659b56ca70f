#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace cstar::interp {

using Complex = std::complex<double>;

// Chebyshev-Lobatto nodes of [lo, hi], ordered from hi down to lo:
// t_i = mid + half * cos(i*pi/(g-1)), i = 0..g-1.
inline std::vector<double> lobatto_nodes(int g, double lo, double hi) {
  std::vector<double> t(g);
  if (g == 1) {
    t[0] = 0.5 * (lo + hi);
    return t;
  }
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < g; ++i) t[i] = mid + half * std::cos(pi * i / (g - 1));
  return t;
}

// Barycentric weights for the Lobatto grid: (-1)^i, halved at the ends.
inline std::vector<double> lobatto_weights(int g) {
  std::vector<double> w(g);
  for (int i = 0; i < g; ++i) w[i] = (i % 2 == 0) ? 1.0 : -1.0;
  w[0] *= 0.5;
  w[g - 1] *= 0.5;
  return w;
}

// Evaluate the polynomial interpolant of (nodes, values) at t using the
// barycentric formula. Exact node hits short-circuit to the stored sample.
inline Complex barycentric_eval(const std::vector<double>& nodes,
                                const std::vector<double>& weights,
                                const std::vector<Complex>& values, double t) {
  const int g = static_cast<int>(nodes.size());
  Complex num(0.0, 0.0);
  double den = 0.0;
  for (int i = 0; i < g; ++i) {
    const double diff = t - nodes[i];
    if (diff == 0.0) return values[i];
    const double q = weights[i] / diff;
    num += q * values[i];
    den += q;
  }
  return num / den;
}

}  // namespace cstar::interp
