#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "cstar/algebra.hpp"
#include "cstar/cxdense.hpp"
#include "cstar/real_matrix.hpp"

namespace cstar {

// Lower/upper band half-widths of a sparsity pattern.
// a_ij = 0 whenever i - j > p or j - i > s; m = max(p, s).
struct Bandwidths {
  int m = 0;
  int p = 0;
  int s = 0;
};

// Directed shortest-path lengths over a sparsity graph. Unreachable pairs
// carry the sentinel n + 1 (any finite distance is at most n - 1).
class DistanceMatrix {
 public:
  DistanceMatrix() : n_(0) {}
  explicit DistanceMatrix(int n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, n + 1) {}

  int order() const { return n_; }
  int unreachable_sentinel() const { return n_ + 1; }
  int& at(int i, int j) { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  const int& at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  bool is_unreachable(int i, int j) const { return at(i, j) > n_; }

 private:
  int n_;
  std::vector<int> d_;
};

// n x n matrix over one of the entry algebras, stored dense with an explicit
// boolean sparsity pattern. Entries outside the pattern are exact zeros.
template <Element E>
class CStarMatrix {
 public:
  CStarMatrix() : n_(0) {}
  CStarMatrix(int n, const E& prototype)
      : n_(n),
        proto_(prototype.zero_like()),
        entries_(static_cast<std::size_t>(n) * n, prototype.zero_like()),
        mask_(static_cast<std::size_t>(n) * n, 0) {
    if (n <= 0) throw InvalidElement("matrix order must be positive");
  }

  static CStarMatrix identity(int n, const E& prototype) {
    CStarMatrix m(n, prototype);
    const E one = prototype.one_like();
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
  }

  int order() const { return n_; }
  const E& prototype() const { return proto_; }

  const E& at(int i, int j) const { return entries_[idx(i, j)]; }
  bool in_pattern(int i, int j) const { return mask_[idx(i, j)] != 0; }

  void set(int i, int j, const E& v) {
    if (!v.compatible(proto_))
      throw IncompatibleOperands("entry does not match the matrix entry algebra");
    entries_[idx(i, j)] = v;
    mask_[idx(i, j)] = 1;
  }

  CStarMatrix adjoint() const {
    CStarMatrix r(n_, proto_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (in_pattern(i, j)) r.set(j, i, at(i, j).adjoint());
    return r;
  }

  CStarMatrix scaled(double s) const {
    CStarMatrix r = *this;
    for (std::size_t t = 0; t < r.entries_.size(); ++t)
      if (r.mask_[t]) r.entries_[t] = r.entries_[t].scaled(s);
    return r;
  }

  CStarMatrix scaled(Complex z) const
    requires ComplexScalable<E>
  {
    CStarMatrix r = *this;
    for (std::size_t t = 0; t < r.entries_.size(); ++t)
      if (r.mask_[t]) r.entries_[t] = r.entries_[t].scaled(z);
    return r;
  }

  friend CStarMatrix operator+(const CStarMatrix& a, const CStarMatrix& b) {
    a.require_same(b);
    CStarMatrix r = a;
    for (std::size_t t = 0; t < r.entries_.size(); ++t)
      if (b.mask_[t]) {
        r.entries_[t] = r.mask_[t] ? (r.entries_[t] + b.entries_[t]) : b.entries_[t];
        r.mask_[t] = 1;
      }
    return r;
  }

  friend CStarMatrix operator-(const CStarMatrix& a, const CStarMatrix& b) {
    a.require_same(b);
    CStarMatrix r = a;
    for (std::size_t t = 0; t < r.entries_.size(); ++t)
      if (b.mask_[t]) {
        r.entries_[t] = r.mask_[t] ? (r.entries_[t] - b.entries_[t])
                                   : b.entries_[t].scaled(-1.0);
        r.mask_[t] = 1;
      }
    return r;
  }

  // Entry-algebra matrix product. The result pattern is the boolean product
  // of the operand patterns; out-of-pattern terms are never accumulated, so
  // structural zeros stay exact. Entries are independent, which keeps the
  // parallel loop bit-deterministic for any thread count.
  friend CStarMatrix operator*(const CStarMatrix& a, const CStarMatrix& b) {
    a.require_same(b);
    const int n = a.n_;
    CStarMatrix r(n, a.proto_);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k)
          if (a.in_pattern(i, k) && b.in_pattern(k, j)) {
            r.mask_[r.idx(i, j)] = 1;
            break;
          }
      }
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!r.mask_[r.idx(i, j)]) continue;
        E acc = a.proto_;
        for (int k = 0; k < n; ++k)
          if (a.in_pattern(i, k) && b.in_pattern(k, j))
            acc = acc + a.at(i, k) * b.at(k, j);
        r.entries_[r.idx(i, j)] = acc;
      }
    return r;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  void require_same(const CStarMatrix& o) const {
    if (n_ != o.n_) throw IncompatibleOperands("matrix orders differ");
    if (!proto_.compatible(o.proto_))
      throw IncompatibleOperands("matrices live over different entry algebras");
  }

  int n_;
  E proto_;
  std::vector<E> entries_;
  std::vector<std::uint8_t> mask_;
};

// The matricial norm A-hat: entrywise norms as a real nonnegative matrix.
template <Element E>
RealNonnegMatrix matricial_norm(const CStarMatrix<E>& a) {
  const int n = a.order();
  RealNonnegMatrix m(n);
#pragma omp parallel for collapse(2) schedule(dynamic)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.in_pattern(i, j)) m.at(i, j) = a.at(i, j).norm();
  return m;
}

// Certified upper bound on the operator norm: ||A|| <= ||A-hat||_2.
template <Element E>
double op_norm_upper(const CStarMatrix<E>& a) {
  return spectral_norm_2(matricial_norm(a));
}

template <Element E>
Bandwidths bandwidths(const CStarMatrix<E>& a) {
  Bandwidths bw;
  const int n = a.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.in_pattern(i, j)) {
        bw.p = std::max(bw.p, i - j);
        bw.s = std::max(bw.s, j - i);
      }
  bw.m = std::max(bw.p, bw.s);
  return bw;
}

// Directed BFS shortest-path lengths over the sparsity graph of A.
template <Element E>
DistanceMatrix graph_distances(const CStarMatrix<E>& a) {
  const int n = a.order();
  DistanceMatrix d(n);
  std::vector<int> queue;
  queue.reserve(n);
  for (int src = 0; src < n; ++src) {
    queue.clear();
    queue.push_back(src);
    d.at(src, src) = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      const int du = d.at(src, u);
      for (int v = 0; v < n; ++v)
        if (v != u && a.in_pattern(u, v) && d.is_unreachable(src, v)) {
          d.at(src, v) = du + 1;
          queue.push_back(v);
        }
    }
  }
  return d;
}

// Hermitian test at relative tolerance 1e-12 against the largest entry norm.
template <Element E>
bool is_hermitian(const CStarMatrix<E>& a, double rel_tol = 1e-12) {
  const int n = a.order();
  double scale = 0.0;
  RealNonnegMatrix nm = matricial_norm(a);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, nm.at(i, j));
  if (scale == 0.0) return true;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const E diff = a.at(i, j) - a.at(j, i).adjoint();
      if (diff.norm() > rel_tol * scale) return false;
    }
  return true;
}

// (2/(beta-alpha)) A - ((beta+alpha)/(beta-alpha)) I. Maps a Hermitian
// matrix with spectrum in [alpha, beta] to one with spectrum in [-1, 1].
// A pure scaling (alpha = -beta) leaves the sparsity pattern untouched.
template <Element E>
CStarMatrix<E> scale_shift_hermitian(const CStarMatrix<E>& a, double alpha,
                                     double beta) {
  if (!(beta > alpha)) throw InvalidInterval("scale_shift requires beta > alpha");
  if (!is_hermitian(a))
    throw PreconditionViolation("scale_shift_hermitian requires a Hermitian matrix");
  const double scale = 2.0 / (beta - alpha);
  const double shift = (beta + alpha) / (beta - alpha);
  CStarMatrix<E> r = a.scaled(scale);
  if (shift != 0.0) {
    const E one = a.prototype().one_like();
    r = r - CStarMatrix<E>::identity(a.order(), a.prototype()).scaled(shift);
  }
  return r;
}

// Exact operator norm of a matrix over C([lo, hi]), sampled on a fine grid:
// ||A|| = max_t ||A(t)||_2. Estimates from below at grid resolution.
inline double sup_pointwise_norm(const CStarMatrix<FunctionElement>& a,
                                 int refine = 2001) {
  const int n = a.order();
  const FunctionElement& proto = a.prototype();
  const int g = proto.grid_size();
  const std::vector<double> nodes = interp::lobatto_nodes(g, proto.lo(), proto.hi());
  const std::vector<double> w = interp::lobatto_weights(g);
  const std::vector<double> fine =
      interp::lobatto_nodes(std::max(refine, g), proto.lo(), proto.hi());
  double best = 0.0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::size_t ti = 0; ti < fine.size(); ++ti) {
    std::vector<Complex> m(static_cast<std::size_t>(n) * n, Complex(0.0, 0.0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.in_pattern(i, j))
          m[static_cast<std::size_t>(i) * n + j] = interp::barycentric_eval(
              nodes, w, a.at(i, j).samples(), fine[ti]);
    best = std::max(best, detail::spectral_norm_complex(m, n));
  }
  return best;
}

}  // namespace cstar
