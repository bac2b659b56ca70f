#pragma once

// Independent numerical oracles used only by the tests: dense complex
// arithmetic, a Jacobi-diagonalization spectral norm, a scaling-and-squaring
// matrix exponential, Floyd-Warshall distances, and modified Bessel values
// by power series. These deliberately avoid the library's own code paths.

#include <complex>
#include <vector>

#include "cstar/algebra.hpp"
#include "cstar/matrix.hpp"

namespace oracles {

using Complex = std::complex<double>;

// Dense complex matrix, row-major.
struct CMat {
  int n = 0;
  std::vector<Complex> a;

  CMat() = default;
  explicit CMat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}
  Complex& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Complex& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

CMat identity(int n);
CMat mul(const CMat& x, const CMat& y);
CMat add(const CMat& x, const CMat& y);
CMat scale(const CMat& x, Complex s);
CMat adjoint(const CMat& x);
double max_abs_diff(const CMat& x, const CMat& y);

// Spectral norm through cyclic Jacobi diagonalization of A* A.
double spectral_norm(const CMat& x);

// e^A by scaling and squaring with a Taylor core.
CMat expm(const CMat& x);

// All-pairs shortest paths over a directed boolean adjacency; `inf` is
// returned for unreachable pairs.
std::vector<std::vector<int>> floyd_warshall(const std::vector<std::vector<bool>>& adj,
                                             int inf);

// Modified Bessel function I_j(x) by its power series.
double bessel_i(int j, double x);

// Flatteners into dense complex matrices.
CMat flatten(const cstar::CStarMatrix<cstar::ComplexScalar>& m);
CMat flatten(const cstar::CStarMatrix<cstar::BlockElement>& m);
// Quaternion matrices flatten through the 2x2 representation.
CMat flatten(const cstar::CStarMatrix<cstar::QuaternionElement>& m);
// Function matrices evaluate at a point of their interval.
CMat flatten_at(const cstar::CStarMatrix<cstar::FunctionElement>& m, double t);

}  // namespace oracles
