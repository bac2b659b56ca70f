#pragma once

#include <cmath>
#include <vector>

#include "cstar/approx.hpp"
#include "cstar/matrix.hpp"

namespace cstar {

// Result of a matrix-function evaluation together with its truncation
// certificate (Chebyshev tail sum or the Taylor-disk formula).
template <Element E>
struct MatFunResult {
  CStarMatrix<E> value;
  int degree = 0;
  double certificate = 0.0;
  double enclosure_radius = 0.0;  // beta-hat (Chebyshev) or r (Taylor)
};

// sum_j c_j T_j(A) via the three-term recurrence T_{j+1} = 2 A T_j - T_{j-1}.
// The caller guarantees sigma(A) in [-1, 1].
template <Element E>
CStarMatrix<E> eval_poly_matrix(const CStarMatrix<E>& a, const ChebyshevSeries& s) {
  const int n = a.order();
  const int deg = s.degree();
  CStarMatrix<E> result =
      CStarMatrix<E>::identity(n, a.prototype()).scaled(s.coeffs[0]);
  if (deg == 0) return result;

  CStarMatrix<E> t_prev = CStarMatrix<E>::identity(n, a.prototype());
  CStarMatrix<E> t_cur = a;
  result = result + a.scaled(s.coeffs[1]);
  for (int j = 2; j <= deg; ++j) {
    CStarMatrix<E> t_next = (a * t_cur).scaled(2.0) - t_prev;
    result = result + t_next.scaled(s.coeffs[j]);
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return result;
}

// f(A) for Hermitian A: enclose the spectrum in [-beta, beta] with
// beta = ||A-hat||_2, interpolate g(z) = f(beta z) adaptively, evaluate on
// A / beta with the Chebyshev recurrence. The certificate is the Chebyshev
// tail sum of g, a norm bound on the truncation error.
template <Element E>
MatFunResult<E> matfun_hermitian(const CStarMatrix<E>& a, const ScalarFn& f,
                                 double tol = 1e-14, int kmax = 256) {
  if (!is_hermitian(a))
    throw PreconditionViolation("matfun_hermitian requires a Hermitian matrix");
  const double beta = op_norm_upper(a);
  MatFunResult<E> out{CStarMatrix<E>(a.order(), a.prototype())};
  if (beta == 0.0) {
    const Complex f0 = f(Complex(0.0, 0.0));
    out.value = CStarMatrix<E>::identity(a.order(), a.prototype()).scaled(f0.real());
    return out;
  }
  const ScalarFn g = [f, beta](Complex z) { return f(beta * z); };
  const ChebyshevSeries s = cheb_interpolate(g, tol, kmax);
  const CStarMatrix<E> scaled = scale_shift_hermitian(a, -beta, beta);
  out.value = eval_poly_matrix(scaled, s);
  out.degree = s.degree();
  out.certificate = cheb_tail_bound(s);
  out.enclosure_radius = beta;
  return out;
}

// f(A) by the truncated Taylor expansion sum_{j<=k} a_j A^j, valid for any
// matrix whose numerical range lies in the disk of radius r = ||A-hat||_2,
// provided f is analytic on |z| <= R with R > r. The certificate is the
// Taylor-disk error bound M(R)/(1 - r/R) (r/R)^{k+1}.
template <Element E>
  requires ComplexScalable<E>
MatFunResult<E> matfun_taylor(const CStarMatrix<E>& a, const ScalarFn& f,
                              double R, int k) {
  const double r = op_norm_upper(a);
  if (!(R > r))
    throw InvalidRadius("Taylor radius must exceed the field-of-values radius");
  const TaylorSeries t = taylor_coeffs(f, k, R);

  const int n = a.order();
  CStarMatrix<E> result =
      CStarMatrix<E>::identity(n, a.prototype()).scaled(t.coeffs[0]);
  CStarMatrix<E> power = CStarMatrix<E>::identity(n, a.prototype());
  for (int j = 1; j <= k; ++j) {
    power = power * a;
    result = result + power.scaled(t.coeffs[j]);
  }

  MatFunResult<E> out{std::move(result)};
  out.degree = k;
  const double mR = disk_max(f, R);
  const double q = r / R;
  out.certificate = (r > 0.0) ? mR / (1.0 - q) * std::pow(q, k + 1) : 0.0;
  out.enclosure_radius = r;
  return out;
}

// Power series with real coefficients; the only functions of quaternion
// matrices that are unambiguous, since R is the center of H.
struct PowerSeries {
  std::vector<double> coeffs;
  double radius = 0.0;  // radius of convergence (HUGE_VAL for entire)

  // exp(z) truncated at degree k.
  static PowerSeries exponential(int k) {
    PowerSeries p;
    p.coeffs.resize(k + 1);
    double c = 1.0;
    for (int j = 0; j <= k; ++j) {
      p.coeffs[j] = c;
      c /= (j + 1.0);
    }
    p.radius = HUGE_VAL;
    return p;
  }
};

// Direct evaluation of a real-coefficient power series on a matrix, valid
// for every entry algebra including quaternions. Uses coefficients up to
// degree k; the certificate is sum_{k < j <= deg} |a_j| r^j.
template <Element E>
MatFunResult<E> matfun_power_series(const CStarMatrix<E>& a,
                                    const PowerSeries& ps, int k) {
  const double r = op_norm_upper(a);
  if (!(ps.radius > r))
    throw InvalidRadius("power series not convergent at the matrix radius");
  const int deg = static_cast<int>(ps.coeffs.size()) - 1;
  k = std::min(k, deg);

  const int n = a.order();
  CStarMatrix<E> result =
      CStarMatrix<E>::identity(n, a.prototype()).scaled(ps.coeffs[0]);
  CStarMatrix<E> power = CStarMatrix<E>::identity(n, a.prototype());
  for (int j = 1; j <= k; ++j) {
    power = power * a;
    result = result + power.scaled(ps.coeffs[j]);
  }

  MatFunResult<E> out{std::move(result)};
  out.degree = k;
  out.enclosure_radius = r;
  double tail = 0.0;
  for (int j = k + 1; j <= deg; ++j) tail += std::abs(ps.coeffs[j]) * std::pow(r, j);
  out.certificate = tail;
  return out;
}

inline MatFunResult<QuaternionElement> matfun_quaternion(
    const CStarMatrix<QuaternionElement>& a, const PowerSeries& ps, int k) {
  return matfun_power_series(a, ps, k);
}

// Exact inverse of a triangular matrix with unit diagonal, through the
// finite Neumann series sum_{j<n} (I - C)^j; I - C is nilpotent, so the
// truncated series is the inverse with no approximation error.
template <Element E>
CStarMatrix<E> neumann_inverse(const CStarMatrix<E>& c) {
  const int n = c.order();
  const Bandwidths bw = bandwidths(c);
  if (bw.p != 0 && bw.s != 0)
    throw PreconditionViolation("neumann_inverse requires a triangular matrix");
  const E one = c.prototype().one_like();
  for (int i = 0; i < n; ++i)
    if ((c.at(i, i) - one).norm() > 1e-12)
      throw PreconditionViolation("neumann_inverse requires a unit diagonal");
  const CStarMatrix<E> w = CStarMatrix<E>::identity(n, c.prototype()) - c;
  CStarMatrix<E> sum = CStarMatrix<E>::identity(n, c.prototype());
  CStarMatrix<E> power = CStarMatrix<E>::identity(n, c.prototype());
  for (int j = 1; j < n; ++j) {
    power = power * w;
    sum = sum + power;
  }
  return sum;
}

// Entrywise embedding of a quaternion matrix as a matrix of 2x2 blocks.
CStarMatrix<BlockElement> quat_embed(const CStarMatrix<QuaternionElement>& a);

// Inverse of quat_embed on exact images.
CStarMatrix<QuaternionElement> quat_unembed(const CStarMatrix<BlockElement>& m);

// The embedding route for quaternion matrix functions: apply the 2x2
// representation entrywise, evaluate the same series on the block image,
// map back. Cross-checks matfun_quaternion through phi(f(A)) = f(phi(A)).
MatFunResult<QuaternionElement> matfun_quaternion_embedded(
    const CStarMatrix<QuaternionElement>& a, const PowerSeries& ps, int k);

// Entry norms of a result matrix; same map as matricial_norm, exposed under
// the name the reports use.
template <Element E>
RealNonnegMatrix entry_norm_matrix(const CStarMatrix<E>& a) {
  return matricial_norm(a);
}

}  // namespace cstar
