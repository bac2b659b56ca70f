#include "cstar/examples.hpp"

#include <cmath>

#include "cstar/lcg.hpp"

namespace cstar::examples {

namespace {

FunctionElement fn(double lo, double hi, int grid, double (*f)(double)) {
  return FunctionElement::sample(lo, hi, grid, [f](double t) {
    return Complex(f(t), 0.0);
  });
}

QuaternionElement random_quaternion(Lcg& rng, double lo, double hi) {
  const double a = rng.next_uniform(lo, hi);
  const double b = rng.next_uniform(lo, hi);
  const double c = rng.next_uniform(lo, hi);
  const double d = rng.next_uniform(lo, hi);
  return QuaternionElement(a, b, c, d);
}

}  // namespace

CStarMatrix<FunctionElement> ex1_bidiagonal(int n, int grid) {
  const FunctionElement one = FunctionElement::constant(1.0, 2.0, grid, Complex(1.0));
  const FunctionElement decay = fn(1.0, 2.0, grid, [](double t) { return std::exp(-t); });
  CStarMatrix<FunctionElement> c(n, one.zero_like());
  for (int i = 0; i < n; ++i) {
    c.set(i, i, one);
    if (i + 1 < n) c.set(i, i + 1, decay);
  }
  return c;
}

CStarMatrix<FunctionElement> ex2_cct(int n, int grid) {
  const CStarMatrix<FunctionElement> c = ex1_bidiagonal(n, grid);
  return c * c.adjoint();
}

CStarMatrix<FunctionElement> ex4_toeplitz(int n, int grid) {
  const FunctionElement one = FunctionElement::constant(0.0, 1.0, grid, Complex(1.0));
  const FunctionElement decay = fn(0.0, 1.0, grid, [](double t) { return std::exp(-t); });
  CStarMatrix<FunctionElement> a(n, one.zero_like());
  for (int i = 0; i < n; ++i) {
    a.set(i, i, one);
    if (i + 1 < n) {
      a.set(i, i + 1, decay);
      a.set(i + 1, i, decay);
    }
  }
  return a;
}

CStarMatrix<FunctionElement> ex4bis_pattern(int n, int grid) {
  const FunctionElement one = FunctionElement::constant(0.0, 1.0, grid, Complex(1.0));
  const FunctionElement t_fn = fn(0.0, 1.0, grid, [](double t) { return t; });
  const FunctionElement t2m1 = fn(0.0, 1.0, grid, [](double t) { return t * t - 1.0; });
  CStarMatrix<FunctionElement> a(n, one.zero_like());
  for (int i = 0; i < n; ++i) a.set(i, i, one);
  // Column index j = 1..n-1 of the superdiagonal entry a_{j,j+1} (1-based):
  // odd j -> 1, j = 2 mod 4 -> t, j = 0 mod 4 -> t^2 - 1.
  for (int j = 1; j < n; ++j) {
    const FunctionElement& e = (j % 2 == 1) ? one : (j % 4 == 2 ? t_fn : t2m1);
    a.set(j - 1, j, e);
    a.set(j, j - 1, e);
  }
  return a;
}

CStarMatrix<BlockElement> ex6_block_banded(int n, std::uint64_t seed, int k) {
  Lcg rng(seed);
  CStarMatrix<BlockElement> a(n, BlockElement(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i - j > 2 || j - i > 1) continue;
      BlockElement b(k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) b.at(r, c) = Complex(rng.next_uniform(-1.0, 1.0), 0.0);
      a.set(i, j, b);
    }
  return a;
}

CStarMatrix<QuaternionElement> ex7a_quaternion_tridiagonal(int n, std::uint64_t seed) {
  Lcg rng(seed);
  const QuaternionElement diag(rng.next_uniform(-5.0, 5.0), 0.0, 0.0, 0.0);
  const QuaternionElement off = random_quaternion(rng, -5.0, 5.0);
  CStarMatrix<QuaternionElement> a(n, QuaternionElement());
  for (int i = 0; i < n; ++i) {
    a.set(i, i, diag);
    if (i + 1 < n) {
      a.set(i, i + 1, off);
      a.set(i + 1, i, off.adjoint());
    }
  }
  return a;
}

CStarMatrix<QuaternionElement> ex7b_quaternion_sparse(int n, std::uint64_t seed) {
  Lcg rng(seed);
  CStarMatrix<QuaternionElement> a(n, QuaternionElement());
  for (int i = 0; i < n; ++i)
    a.set(i, i, QuaternionElement(rng.next_uniform(-5.0, 5.0), 0.0, 0.0, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.next_unit() >= 0.15) continue;
      const QuaternionElement q = random_quaternion(rng, -5.0, 5.0);
      a.set(i, j, q);
      a.set(j, i, q.adjoint());
    }
  return a;
}

}  // namespace cstar::examples
