#include "cstar/real_matrix.hpp"

#include <cmath>
#include <numeric>

namespace cstar {

namespace {

void matvec(const RealNonnegMatrix& m, const std::vector<double>& x,
            std::vector<double>& y) {
  const int n = m.order();
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
    y[i] = s;
  }
}

void matvec_t(const RealNonnegMatrix& m, const std::vector<double>& x,
              std::vector<double>& y) {
  const int n = m.order();
  for (int j = 0; j < n; ++j) y[j] = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    for (int j = 0; j < n; ++j) y[j] += m.at(i, j) * xi;
  }
}

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

double spectral_norm_2(const RealNonnegMatrix& m, double tol, int max_iter) {
  const int n = m.order();
  if (n == 0) return 0.0;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> u(n), w(n);
  double lambda_prev = -1.0;
  for (int it = 0; it < max_iter; ++it) {
    matvec(m, v, u);
    matvec_t(m, u, w);
    double lambda = 0.0;  // ||Mv||^2 = Rayleigh quotient of M^T M at unit v
    for (double s : u) lambda += s * s;
    const double wn = norm2(w);
    if (wn == 0.0) return 0.0;
    for (int j = 0; j < n; ++j) v[j] = w[j] / wn;
    if (it > 0 && std::abs(lambda - lambda_prev) <= tol * std::max(lambda, 1e-300))
      return std::sqrt(lambda);
    lambda_prev = lambda;
  }
  throw NumericFailure("spectral_norm_2 power iteration did not converge");
}

double rho_upper(const RealNonnegMatrix& m, double tol, int max_iter) {
  const int n = m.order();
  if (n == 0) return 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.at(i, j) < 0.0)
        throw PreconditionViolation("rho_upper requires a nonnegative matrix");

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  // Growth factors ||Mx_k|| of the normalized power sequence. Their
  // geometric mean over a window converges to the Perron root even when
  // the pattern is periodic and single-step ratios oscillate.
  const int window = 16;
  std::vector<double> log_growth;
  log_growth.reserve(max_iter);
  for (int it = 0; it < max_iter; ++it) {
    matvec(m, x, y);
    const double g = norm2(y);
    if (g == 0.0) return 0.0;  // power sequence vanished: nilpotent part only
    for (int j = 0; j < n; ++j) x[j] = y[j] / g;
    log_growth.push_back(std::log(g));
    if (static_cast<int>(log_growth.size()) >= 2 * window) {
      const auto tail = log_growth.end();
      const double cur =
          std::accumulate(tail - window, tail, 0.0) / window;
      const double prev =
          std::accumulate(tail - 2 * window, tail - window, 0.0) / window;
      const double rho = std::exp(cur);
      if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur)) ||
          std::abs(std::exp(prev) - rho) <= tol * std::max(rho, 1e-300))
        return rho;
    }
  }
  throw NumericFailure("rho_upper power iteration did not converge");
}

}  // namespace cstar
