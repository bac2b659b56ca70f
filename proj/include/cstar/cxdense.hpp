#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace cstar::detail {

using Complex = std::complex<double>;

// Spectral norm of a dense complex n x n matrix (row-major) by power
// iteration on A*A with a deterministic all-ones start.
inline double spectral_norm_complex(const std::vector<Complex>& a, int n,
                                    double tol = 1e-12, int max_iter = 5000) {
  if (n == 0) return 0.0;
  std::vector<Complex> v(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
  std::vector<Complex> u(n), w(n);
  double lambda_prev = -1.0;
  for (int it = 0; it < max_iter; ++it) {
    // u = A v
    for (int i = 0; i < n; ++i) {
      Complex s(0.0, 0.0);
      const Complex* row = &a[static_cast<std::size_t>(i) * n];
      for (int j = 0; j < n; ++j) s += row[j] * v[j];
      u[i] = s;
    }
    // w = A* u
    for (int j = 0; j < n; ++j) w[j] = Complex(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
      const Complex* row = &a[static_cast<std::size_t>(i) * n];
      const Complex ui = u[i];
      for (int j = 0; j < n; ++j) w[j] += std::conj(row[j]) * ui;
    }
    // Rayleigh quotient of A*A at unit v equals ||Av||^2.
    double lambda = 0.0;
    for (int i = 0; i < n; ++i) lambda += std::norm(u[i]);
    double wnorm = 0.0;
    for (int j = 0; j < n; ++j) wnorm += std::norm(w[j]);
    wnorm = std::sqrt(wnorm);
    if (wnorm == 0.0) return 0.0;
    for (int j = 0; j < n; ++j) v[j] = w[j] / wnorm;
    if (it > 0 && std::abs(lambda - lambda_prev) <= tol * std::max(lambda, 1e-300))
      return std::sqrt(lambda);
    lambda_prev = lambda;
  }
  return std::sqrt(std::max(lambda_prev, 0.0));
}

}  // namespace cstar::detail
