#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "cstar/error.hpp"

namespace cstar {

using Complex = std::complex<double>;

// Scalar functions are complex-analytic callables; real inputs are passed
// as complex numbers with zero imaginary part.
using ScalarFn = std::function<Complex(Complex)>;

// Truncated Chebyshev expansion on [-1, 1] with real coefficients.
// Series produced by cheb_interpolate keep the generating function around
// so the tail can be estimated by extending the interpolation.
struct ChebyshevSeries {
  std::vector<double> coeffs;  // c_0 .. c_k
  ScalarFn source;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double eval(double x) const;  // Clenshaw recurrence
};

// Truncated Taylor expansion around 0, with the sampling radius recorded.
struct TaylorSeries {
  std::vector<Complex> coeffs;  // a_0 .. a_k
  double radius = 0.0;          // circle used for the Cauchy coefficients

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Ellipse with foci +-1 whose semi-axes sum to chi > 1.
struct BernsteinEllipse {
  double chi;

  explicit BernsteinEllipse(double chi_) : chi(chi_) {
    if (!(chi > 1.0)) throw InvalidInterval("Bernstein ellipse requires chi > 1");
  }
  double semi_major() const { return 0.5 * (chi + 1.0 / chi); }
  double semi_minor() const { return 0.5 * (chi - 1.0 / chi); }
};

// Disk of center 0 used by the nonnormal bounds: r encloses the numerical
// range, R > r is the analyticity sampling radius.
struct DiskRegion {
  double r;
  double R;

  DiskRegion(double r_, double R_) : r(r_), R(R_) {
    if (!(0.0 < r && r < R)) throw InvalidRadius("disk region requires 0 < r < R");
  }
};

// Chebyshev coefficients of f on [-1, 1] by Lobatto interpolation at a fixed
// degree. f must be real on the real axis.
ChebyshevSeries cheb_interpolate_fixed(const ScalarFn& f, int degree);

// Adaptive variant: the degree doubles from 8 until the last two
// coefficients drop below tol * max_j |c_j|, capped at kmax.
ChebyshevSeries cheb_interpolate(const ScalarFn& f, double tol, int kmax = 256);

// Estimate of sum_{j > k} |c_j| for the full expansion of s.source, obtained
// by extending the interpolation degree until the estimate stabilizes to
// fullseries_tol. Coefficients below the double-precision noise floor are
// excluded. For Hermitian A with spectrum in [-1, 1] this sum bounds the
// truncation error of the matrix polynomial in norm, since ||T_j(A)|| <= 1.
double cheb_tail_bound(const ChebyshevSeries& s, double fullseries_tol = 1e-16);

// max |f| over the boundary of the Bernstein ellipse, sampled uniformly in
// the parameter. By the maximum-modulus principle this is the regional max
// when f is analytic inside; analyticity is verified by comparing f against
// its own Cauchy integral at interior probe points, so a singularity inside
// the ellipse raises RegionViolation even when all boundary samples are
// finite.
double ellipse_max(const ScalarFn& f, const BernsteinEllipse& e, int samples = 720);

// Same on the circle |z| = R.
double disk_max(const ScalarFn& f, double R, int samples = 720);

// Taylor coefficients a_0..a_k of f at 0 via trapezoid quadrature of the
// Cauchy integrals on |z| = rs, with max(4k, 256) sample points.
TaylorSeries taylor_coeffs(const ScalarFn& f, int k, double rs);

}  // namespace cstar
