#include "cstar/approx.hpp"

#include <algorithm>
#include <cmath>

namespace cstar {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Raw Lobatto-interpolation coefficients at degree n (n+1 nodes).
// Accumulates in long double; the cosine sums are the only place where
// rounding could drown the tiny trailing coefficients we sum later.
std::vector<double> lobatto_coefficients(const ScalarFn& f, int n) {
  std::vector<Complex> fx(n + 1);
  double scale = 0.0;
  for (int i = 0; i <= n; ++i) {
    fx[i] = f(Complex(std::cos(kPi * i / n), 0.0));
    if (!std::isfinite(fx[i].real()) || !std::isfinite(fx[i].imag()))
      throw RegionViolation("function not finite on [-1, 1]");
    scale = std::max(scale, std::abs(fx[i]));
  }
  for (int i = 0; i <= n; ++i)
    if (std::abs(fx[i].imag()) > 1e-10 * (1.0 + scale))
      throw ApproximationFailure("function is not real on the real axis");

  std::vector<double> c(n + 1);
  for (int j = 0; j <= n; ++j) {
    long double acc = 0.0L;
    for (int i = 0; i <= n; ++i) {
      const long double w = (i == 0 || i == n) ? 0.5L : 1.0L;
      acc += w * static_cast<long double>(fx[i].real()) *
             std::cos(static_cast<long double>(kPi) * i * j / n);
    }
    acc *= 2.0L / n;
    if (j == 0 || j == n) acc *= 0.5L;
    c[j] = static_cast<double>(acc);
  }
  return c;
}

double max_abs(const std::vector<double>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

// Sum of |c_j| for j > k, ignoring coefficients that sit below the working
// precision of the interpolation (they are rounding noise, and summing
// thousands of them would swamp tails at the 1e-14 scale).
double tail_sum(const std::vector<double>& c, int k) {
  const double cutoff = 1e-15 * max_abs(c);
  double s = 0.0;
  for (std::size_t j = k + 1; j < c.size(); ++j)
    if (std::abs(c[j]) > cutoff) s += std::abs(c[j]);
  return s;
}

struct Contour {
  std::vector<Complex> z;   // boundary points
  std::vector<Complex> dz;  // dz/dtheta at those points
};

Contour ellipse_contour(const BernsteinEllipse& e, int samples) {
  Contour c;
  c.z.resize(samples);
  c.dz.resize(samples);
  const double a = e.semi_major();
  const double b = e.semi_minor();
  for (int m = 0; m < samples; ++m) {
    const double th = 2.0 * kPi * m / samples;
    c.z[m] = Complex(a * std::cos(th), b * std::sin(th));
    c.dz[m] = Complex(-a * std::sin(th), b * std::cos(th));
  }
  return c;
}

Contour circle_contour(double R, int samples) {
  Contour c;
  c.z.resize(samples);
  c.dz.resize(samples);
  for (int m = 0; m < samples; ++m) {
    const double th = 2.0 * kPi * m / samples;
    const Complex z(R * std::cos(th), R * std::sin(th));
    c.z[m] = z;
    c.dz[m] = Complex(0.0, 1.0) * z;
  }
  return c;
}

// Boundary max plus an analyticity check: at interior probe points w the
// Cauchy integral (2 pi i)^-1 times the contour integral of f(z)/(z - w)
// must reproduce f(w). A pole or branch cut inside the contour breaks the
// identity by a residue-sized amount, which is how region violations are
// detected even when every boundary sample is finite.
double contour_max_checked(const ScalarFn& f, const Contour& c,
                           const std::vector<Complex>& probes, const char* what) {
  const int n = static_cast<int>(c.z.size());
  std::vector<Complex> fz(n);
  double best = 0.0;
  for (int m = 0; m < n; ++m) {
    fz[m] = f(c.z[m]);
    if (!std::isfinite(fz[m].real()) || !std::isfinite(fz[m].imag()))
      throw RegionViolation(std::string("singularity on the boundary of ") + what);
    best = std::max(best, std::abs(fz[m]));
  }
  for (const Complex& w : probes) {
    const Complex fw = f(w);
    if (!std::isfinite(fw.real()) || !std::isfinite(fw.imag()))
      throw RegionViolation(std::string("singularity inside ") + what);
    Complex integral(0.0, 0.0);
    for (int m = 0; m < n; ++m) integral += fz[m] / (c.z[m] - w) * c.dz[m];
    integral /= Complex(0.0, 1.0) * static_cast<double>(n);
    if (std::abs(integral - fw) > 1e-6 * (1.0 + best))
      throw RegionViolation(std::string("function is not analytic inside ") + what);
  }
  return best;
}

std::vector<Complex> scaled_probes(const Contour& c, int count) {
  std::vector<Complex> probes(count);
  const int n = static_cast<int>(c.z.size());
  for (int j = 0; j < count; ++j) {
    const int m = static_cast<int>((static_cast<long long>(j) * n) / count +
                                   n / (4 * count)) %
                  n;
    probes[j] = 0.55 * c.z[m];
  }
  return probes;
}

}  // namespace

double ChebyshevSeries::eval(double x) const {
  double b1 = 0.0, b2 = 0.0;
  for (int j = degree(); j >= 1; --j) {
    const double b0 = coeffs[j] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs[0] + x * b1 - b2;
}

ChebyshevSeries cheb_interpolate_fixed(const ScalarFn& f, int degree) {
  if (degree < 1) throw ApproximationFailure("interpolation degree must be >= 1");
  ChebyshevSeries s;
  s.coeffs = lobatto_coefficients(f, degree);
  s.source = f;
  return s;
}

ChebyshevSeries cheb_interpolate(const ScalarFn& f, double tol, int kmax) {
  if (!(tol > 0.0)) throw ApproximationFailure("tolerance must be positive");
  for (int n = 8; n <= std::max(8, kmax); n *= 2) {
    std::vector<double> c = lobatto_coefficients(f, n);
    const double m = max_abs(c);
    if (m == 0.0 || (std::abs(c[n - 1]) < tol * m && std::abs(c[n]) < tol * m)) {
      ChebyshevSeries s;
      s.coeffs = std::move(c);
      s.source = f;
      return s;
    }
  }
  throw ApproximationFailure("Chebyshev interpolation did not settle by kmax");
}

double cheb_tail_bound(const ChebyshevSeries& s, double fullseries_tol) {
  const int k = s.degree();
  if (!s.source) return 0.0;  // detached series are treated as exact polynomials
  double prev = -1.0;
  double tail = 0.0;
  for (int n = std::max(64, 2 * k); n <= 4096; n *= 2) {
    tail = tail_sum(lobatto_coefficients(s.source, n), k);
    if (prev >= 0.0 && std::abs(tail - prev) < fullseries_tol) return tail;
    prev = tail;
  }
  return tail;
}

double ellipse_max(const ScalarFn& f, const BernsteinEllipse& e, int samples) {
  if (samples < 64) throw PreconditionViolation("ellipse_max requires samples >= 64");
  const Contour c = ellipse_contour(e, samples);
  return contour_max_checked(f, c, scaled_probes(c, 6), "the Bernstein ellipse");
}

double disk_max(const ScalarFn& f, double R, int samples) {
  if (!(R > 0.0)) throw InvalidRadius("disk radius must be positive");
  if (samples < 64) throw PreconditionViolation("disk_max requires samples >= 64");
  const Contour c = circle_contour(R, samples);
  return contour_max_checked(f, c, scaled_probes(c, 6), "the disk");
}

TaylorSeries taylor_coeffs(const ScalarFn& f, int k, double rs) {
  if (!(rs > 0.0)) throw InvalidRadius("sampling radius must be positive");
  if (k < 0) throw ApproximationFailure("Taylor degree must be >= 0");
  const int m = std::max(4 * k, 256);
  const Contour c = circle_contour(rs, m);
  contour_max_checked(f, c, scaled_probes(c, 6), "the disk");

  std::vector<Complex> fz(m);
  for (int i = 0; i < m; ++i) fz[i] = f(c.z[i]);

  TaylorSeries t;
  t.radius = rs;
  t.coeffs.resize(k + 1);
  for (int j = 0; j <= k; ++j) {
    long double re = 0.0L, im = 0.0L;
    for (int i = 0; i < m; ++i) {
      const double th = -2.0 * kPi * i * j / m;
      const Complex term = fz[i] * Complex(std::cos(th), std::sin(th));
      re += term.real();
      im += term.imag();
    }
    const long double denom = static_cast<long double>(m) *
                              std::pow(static_cast<long double>(rs), j);
    t.coeffs[j] = Complex(static_cast<double>(re / denom),
                          static_cast<double>(im / denom));
  }
  return t;
}

}  // namespace cstar
