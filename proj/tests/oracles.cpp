#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracles {

CMat identity(int n) {
  CMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

CMat mul(const CMat& x, const CMat& y) {
  CMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const Complex v = x.at(i, k);
      if (v == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

CMat add(const CMat& x, const CMat& y) {
  CMat r = x;
  for (std::size_t t = 0; t < r.a.size(); ++t) r.a[t] += y.a[t];
  return r;
}

CMat scale(const CMat& x, Complex s) {
  CMat r = x;
  for (Complex& v : r.a) v *= s;
  return r;
}

CMat adjoint(const CMat& x) {
  CMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.at(i, j) = std::conj(x.at(j, i));
  return r;
}

double max_abs_diff(const CMat& x, const CMat& y) {
  double d = 0.0;
  for (std::size_t t = 0; t < x.a.size(); ++t)
    d = std::max(d, std::abs(x.a[t] - y.a[t]));
  return d;
}

double spectral_norm(const CMat& x) {
  // Hermitian H = A* A, then cyclic Jacobi sweeps until off-diagonal mass
  // vanishes; the norm is sqrt(max eigenvalue).
  const int n = x.n;
  if (n == 0) return 0.0;
  CMat h = mul(adjoint(x), x);
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(h.at(p, q));
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const Complex hpq = h.at(p, q);
        if (std::abs(hpq) == 0.0) continue;
        const double app = h.at(p, p).real();
        const double aqq = h.at(q, q).real();
        // Unitary 2x2 rotation annihilating h_pq: diagonalize the Hermitian
        // block [[app, hpq], [conj(hpq), aqq]].
        const double tau = (aqq - app) / (2.0 * std::abs(hpq));
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const Complex s = t * c * (hpq / std::abs(hpq));
        for (int k = 0; k < n; ++k) {
          const Complex hkp = h.at(k, p);
          const Complex hkq = h.at(k, q);
          h.at(k, p) = c * hkp - std::conj(s) * hkq;
          h.at(k, q) = s * hkp + c * hkq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex hpk = h.at(p, k);
          const Complex hqk = h.at(q, k);
          h.at(p, k) = c * hpk - s * hqk;
          h.at(q, k) = std::conj(s) * hpk + c * hqk;
        }
      }
  }
  double lam = 0.0;
  for (int i = 0; i < n; ++i) lam = std::max(lam, h.at(i, i).real());
  return std::sqrt(std::max(lam, 0.0));
}

CMat expm(const CMat& x) {
  // ||A||_1 estimate for the scaling power.
  double a1 = 0.0;
  for (int j = 0; j < x.n; ++j) {
    double col = 0.0;
    for (int i = 0; i < x.n; ++i) col += std::abs(x.at(i, j));
    a1 = std::max(a1, col);
  }
  int squarings = 0;
  while (a1 > 0.5) {
    a1 *= 0.5;
    ++squarings;
  }
  CMat scaled = scale(x, Complex(std::ldexp(1.0, -squarings), 0.0));
  // Taylor core: 25 terms at norm <= 1/2 leaves a remainder below 1e-27.
  CMat sum = identity(x.n);
  CMat term = identity(x.n);
  for (int j = 1; j <= 25; ++j) {
    term = scale(mul(term, scaled), Complex(1.0 / j, 0.0));
    sum = add(sum, term);
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  return sum;
}

std::vector<std::vector<int>> floyd_warshall(const std::vector<std::vector<bool>>& adj,
                                             int inf) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (i != j && adj[i][j]) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] < inf && d[k][j] < inf)
          d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

double bessel_i(int j, double x) {
  // I_j(x) = sum_m (x/2)^(2m+j) / (m! (m+j)!)
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= j; ++i) term *= half / i;  // (x/2)^j / j!
  double sum = term;
  for (int m = 1; m <= 40; ++m) {
    term *= half * half / (m * (m + j));
    sum += term;
    if (term < 1e-300) break;
  }
  return sum;
}

CMat flatten(const cstar::CStarMatrix<cstar::ComplexScalar>& m) {
  CMat r(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      if (m.in_pattern(i, j)) r.at(i, j) = m.at(i, j).value();
  return r;
}

CMat flatten(const cstar::CStarMatrix<cstar::BlockElement>& m) {
  const int k = m.prototype().k();
  CMat r(m.order() * k);
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) {
      if (!m.in_pattern(i, j)) continue;
      const cstar::BlockElement& b = m.at(i, j);
      for (int bi = 0; bi < k; ++bi)
        for (int bj = 0; bj < k; ++bj) r.at(i * k + bi, j * k + bj) = b.at(bi, bj);
    }
  return r;
}

CMat flatten(const cstar::CStarMatrix<cstar::QuaternionElement>& m) {
  CMat r(2 * m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) {
      if (!m.in_pattern(i, j)) continue;
      const cstar::BlockElement b = cstar::quat_to_block(m.at(i, j));
      for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj) r.at(2 * i + bi, 2 * j + bj) = b.at(bi, bj);
    }
  return r;
}

CMat flatten_at(const cstar::CStarMatrix<cstar::FunctionElement>& m, double t) {
  CMat r(m.order());
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      if (m.in_pattern(i, j)) r.at(i, j) = m.at(i, j).eval(t);
  return r;
}

}  // namespace oracles
