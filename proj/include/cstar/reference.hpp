#pragma once

#include "cstar/matrix.hpp"

// Serial reference versions of the parallel kernels. Kept for testing
// (bit-exact comparison against the OpenMP paths) and for the benchmark.

namespace cstar::reference {

template <Element E>
CStarMatrix<E> mat_mul_serial(const CStarMatrix<E>& a, const CStarMatrix<E>& b) {
  if (a.order() != b.order())
    throw IncompatibleOperands("matrix orders differ");
  const int n = a.order();
  CStarMatrix<E> r(n, a.prototype());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      E acc = a.prototype();
      bool hit = false;
      for (int k = 0; k < n; ++k)
        if (a.in_pattern(i, k) && b.in_pattern(k, j)) {
          acc = acc + a.at(i, k) * b.at(k, j);
          hit = true;
        }
      if (hit) r.set(i, j, acc);
    }
  return r;
}

template <Element E>
RealNonnegMatrix matricial_norm_serial(const CStarMatrix<E>& a) {
  const int n = a.order();
  RealNonnegMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.in_pattern(i, j)) m.at(i, j) = a.at(i, j).norm();
  return m;
}

}  // namespace cstar::reference
