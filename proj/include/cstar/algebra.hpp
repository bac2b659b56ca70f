#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <vector>

#include "cstar/error.hpp"
#include "cstar/interp.hpp"

namespace cstar {

using Complex = std::complex<double>;

// Behavioral contract for an entry algebra: a unital *-algebra whose norm
// is submultiplicative and satisfies the C*-identity ||x*x|| = ||x||^2.
template <typename E>
concept Element = std::copyable<E> && requires(const E& a, const E& b, double s) {
  { a.compatible(b) } -> std::convertible_to<bool>;
  { a.zero_like() } -> std::convertible_to<E>;
  { a.one_like() } -> std::convertible_to<E>;
  { a.norm() } -> std::convertible_to<double>;
  { a.adjoint() } -> std::convertible_to<E>;
  { a.is_exact_zero() } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<E>;
  { a - b } -> std::convertible_to<E>;
  { a * b } -> std::convertible_to<E>;
  { a.scaled(s) } -> std::convertible_to<E>;
};

// Algebras that additionally admit scaling by a complex number.
// Quaternions do not: C is not central in H.
template <typename E>
concept ComplexScalable = Element<E> && requires(const E& a, Complex z) {
  { a.scaled(z) } -> std::convertible_to<E>;
};

// ---------------------------------------------------------------------------
// Complex scalars: norm is the modulus, adjoint is conjugation.
// ---------------------------------------------------------------------------
class ComplexScalar {
 public:
  ComplexScalar() : v_(0.0, 0.0) {}
  explicit ComplexScalar(Complex v) : v_(v) {}
  explicit ComplexScalar(double re, double im = 0.0) : v_(re, im) {}

  Complex value() const { return v_; }

  bool compatible(const ComplexScalar&) const { return true; }
  ComplexScalar zero_like() const { return ComplexScalar(); }
  ComplexScalar one_like() const { return ComplexScalar(1.0); }
  double norm() const { return std::abs(v_); }
  ComplexScalar adjoint() const { return ComplexScalar(std::conj(v_)); }
  bool is_exact_zero() const { return v_ == Complex(0.0, 0.0); }
  ComplexScalar scaled(double s) const { return ComplexScalar(s * v_); }
  ComplexScalar scaled(Complex z) const { return ComplexScalar(z * v_); }

  friend ComplexScalar operator+(ComplexScalar a, ComplexScalar b) {
    return ComplexScalar(a.v_ + b.v_);
  }
  friend ComplexScalar operator-(ComplexScalar a, ComplexScalar b) {
    return ComplexScalar(a.v_ - b.v_);
  }
  friend ComplexScalar operator*(ComplexScalar a, ComplexScalar b) {
    return ComplexScalar(a.v_ * b.v_);
  }

 private:
  Complex v_;
};

// ---------------------------------------------------------------------------
// Dense k x k complex blocks: norm is the spectral norm, computed by power
// iteration on x*x (deterministic all-ones start, tol 1e-12, <= 5000 steps).
// ---------------------------------------------------------------------------
class BlockElement {
 public:
  BlockElement() : k_(0) {}
  explicit BlockElement(int k) : k_(k), m_(static_cast<std::size_t>(k) * k) {
    if (k <= 0) throw InvalidElement("block size must be positive");
  }
  BlockElement(int k, std::vector<Complex> entries) : k_(k), m_(std::move(entries)) {
    if (k <= 0 || m_.size() != static_cast<std::size_t>(k) * k)
      throw InvalidElement("block entry count does not match k*k");
  }

  int k() const { return k_; }
  Complex& at(int i, int j) { return m_[static_cast<std::size_t>(i) * k_ + j]; }
  const Complex& at(int i, int j) const { return m_[static_cast<std::size_t>(i) * k_ + j]; }
  const std::vector<Complex>& data() const { return m_; }

  bool compatible(const BlockElement& o) const { return k_ == o.k_; }
  BlockElement zero_like() const { return BlockElement(k_); }
  BlockElement one_like() const {
    BlockElement e(k_);
    for (int i = 0; i < k_; ++i) e.at(i, i) = Complex(1.0, 0.0);
    return e;
  }
  double norm() const;  // largest singular value
  BlockElement adjoint() const {
    BlockElement e(k_);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) e.at(i, j) = std::conj(at(j, i));
    return e;
  }
  bool is_exact_zero() const {
    for (const Complex& v : m_)
      if (v != Complex(0.0, 0.0)) return false;
    return true;
  }
  BlockElement scaled(double s) const {
    BlockElement e = *this;
    for (Complex& v : e.m_) v *= s;
    return e;
  }
  BlockElement scaled(Complex z) const {
    BlockElement e = *this;
    for (Complex& v : e.m_) v *= z;
    return e;
  }

  friend BlockElement operator+(const BlockElement& a, const BlockElement& b) {
    a.require_same(b);
    BlockElement e = a;
    for (std::size_t i = 0; i < e.m_.size(); ++i) e.m_[i] += b.m_[i];
    return e;
  }
  friend BlockElement operator-(const BlockElement& a, const BlockElement& b) {
    a.require_same(b);
    BlockElement e = a;
    for (std::size_t i = 0; i < e.m_.size(); ++i) e.m_[i] -= b.m_[i];
    return e;
  }
  friend BlockElement operator*(const BlockElement& a, const BlockElement& b) {
    a.require_same(b);
    const int k = a.k_;
    BlockElement c(k);
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l) {
        const Complex ail = a.at(i, l);
        if (ail == Complex(0.0, 0.0)) continue;
        for (int j = 0; j < k; ++j) c.at(i, j) += ail * b.at(l, j);
      }
    return c;
  }

 private:
  void require_same(const BlockElement& o) const {
    if (k_ != o.k_) throw IncompatibleOperands("block sizes differ");
  }

  int k_;
  std::vector<Complex> m_;
};

// ---------------------------------------------------------------------------
// Sampled continuous functions on [lo, hi]: values stored at G
// Chebyshev-Lobatto nodes, products taken pointwise on the shared grid.
// The norm is a sup-norm estimate from below, obtained by evaluating the
// interpolant on a finer Lobatto grid (default 2001 points).
// ---------------------------------------------------------------------------
class FunctionElement {
 public:
  static constexpr int kDefaultGrid = 201;
  static constexpr int kNormRefine = 2001;

  FunctionElement() : lo_(0.0), hi_(1.0), samples_(1, Complex(0.0, 0.0)) {}
  FunctionElement(double lo, double hi, std::vector<Complex> samples)
      : lo_(lo), hi_(hi), samples_(std::move(samples)) {
    if (!(lo < hi)) throw InvalidInterval("function interval is empty");
    if (samples_.empty()) throw InvalidElement("function element has no samples");
  }

  // Sample a callable at G Lobatto nodes of [lo, hi].
  template <typename F>
  static FunctionElement sample(double lo, double hi, int g, F&& f) {
    if (!(lo < hi)) throw InvalidInterval("function interval is empty");
    if (g < 2) throw InvalidElement("grid must have at least two nodes");
    std::vector<double> t = interp::lobatto_nodes(g, lo, hi);
    std::vector<Complex> s(g);
    for (int i = 0; i < g; ++i) s[i] = Complex(f(t[i]));
    return FunctionElement(lo, hi, std::move(s));
  }

  static FunctionElement constant(double lo, double hi, int g, Complex c) {
    return FunctionElement(lo, hi, std::vector<Complex>(g, c));
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int grid_size() const { return static_cast<int>(samples_.size()); }
  const std::vector<Complex>& samples() const { return samples_; }

  // Value of the interpolant at an arbitrary point of [lo, hi].
  Complex eval(double t) const {
    std::vector<double> nodes = interp::lobatto_nodes(grid_size(), lo_, hi_);
    std::vector<double> w = interp::lobatto_weights(grid_size());
    return interp::barycentric_eval(nodes, w, samples_, t);
  }

  // Sup-norm estimate: max modulus of the interpolant over `refine` Lobatto
  // points plus the stored samples, so the result never drops below the
  // grid maximum. Estimates from below; refine must be >= G.
  double sup_norm(int refine) const;

  bool compatible(const FunctionElement& o) const {
    return lo_ == o.lo_ && hi_ == o.hi_ && samples_.size() == o.samples_.size();
  }
  FunctionElement zero_like() const {
    return constant(lo_, hi_, grid_size(), Complex(0.0, 0.0));
  }
  FunctionElement one_like() const {
    return constant(lo_, hi_, grid_size(), Complex(1.0, 0.0));
  }
  double norm() const { return sup_norm(std::max(kNormRefine, grid_size())); }
  FunctionElement adjoint() const {
    FunctionElement e = *this;
    for (Complex& v : e.samples_) v = std::conj(v);
    return e;
  }
  bool is_exact_zero() const {
    for (const Complex& v : samples_)
      if (v != Complex(0.0, 0.0)) return false;
    return true;
  }
  FunctionElement scaled(double s) const {
    FunctionElement e = *this;
    for (Complex& v : e.samples_) v *= s;
    return e;
  }
  FunctionElement scaled(Complex z) const {
    FunctionElement e = *this;
    for (Complex& v : e.samples_) v *= z;
    return e;
  }

  friend FunctionElement operator+(const FunctionElement& a, const FunctionElement& b) {
    a.require_same(b);
    FunctionElement e = a;
    for (std::size_t i = 0; i < e.samples_.size(); ++i) e.samples_[i] += b.samples_[i];
    return e;
  }
  friend FunctionElement operator-(const FunctionElement& a, const FunctionElement& b) {
    a.require_same(b);
    FunctionElement e = a;
    for (std::size_t i = 0; i < e.samples_.size(); ++i) e.samples_[i] -= b.samples_[i];
    return e;
  }
  friend FunctionElement operator*(const FunctionElement& a, const FunctionElement& b) {
    a.require_same(b);
    FunctionElement e = a;
    for (std::size_t i = 0; i < e.samples_.size(); ++i) e.samples_[i] *= b.samples_[i];
    return e;
  }

 private:
  void require_same(const FunctionElement& o) const {
    if (!compatible(o))
      throw IncompatibleOperands("function elements live on different grids");
  }

  double lo_, hi_;
  std::vector<Complex> samples_;
};

// ---------------------------------------------------------------------------
// Quaternions q = a + b i + c j + d k. Adjoint is conjugation, the norm is
// the Euclidean modulus, which equals the spectral norm of the 2x2 complex
// image. Only real scalar action is defined.
// ---------------------------------------------------------------------------
class QuaternionElement {
 public:
  QuaternionElement() : a_(0), b_(0), c_(0), d_(0) {}
  QuaternionElement(double a, double b, double c, double d)
      : a_(a), b_(b), c_(c), d_(d) {}

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  bool compatible(const QuaternionElement&) const { return true; }
  QuaternionElement zero_like() const { return QuaternionElement(); }
  QuaternionElement one_like() const { return QuaternionElement(1, 0, 0, 0); }
  double norm() const { return std::sqrt(a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_); }
  QuaternionElement adjoint() const { return QuaternionElement(a_, -b_, -c_, -d_); }
  bool is_exact_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  QuaternionElement scaled(double s) const {
    return QuaternionElement(s * a_, s * b_, s * c_, s * d_);
  }

  friend QuaternionElement operator+(QuaternionElement x, QuaternionElement y) {
    return QuaternionElement(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
  }
  friend QuaternionElement operator-(QuaternionElement x, QuaternionElement y) {
    return QuaternionElement(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
  }
  // Hamilton product.
  friend QuaternionElement operator*(QuaternionElement x, QuaternionElement y) {
    return QuaternionElement(
        x.a_ * y.a_ - x.b_ * y.b_ - x.c_ * y.c_ - x.d_ * y.d_,
        x.a_ * y.b_ + x.b_ * y.a_ + x.c_ * y.d_ - x.d_ * y.c_,
        x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ + x.d_ * y.b_,
        x.a_ * y.d_ + x.b_ * y.c_ - x.c_ * y.b_ + x.d_ * y.a_);
  }

 private:
  double a_, b_, c_, d_;
};

// The 2x2 complex image of a quaternion:
//   [ a+bi   c+di ]
//   [ -c+di  a-bi ]
// Norm-preserving real-algebra homomorphism.
BlockElement quat_to_block(const QuaternionElement& q);

// Inverse of quat_to_block on exact images; averages the redundant entries.
QuaternionElement block_to_quat(const BlockElement& m);

static_assert(Element<ComplexScalar> && ComplexScalable<ComplexScalar>);
static_assert(Element<BlockElement> && ComplexScalable<BlockElement>);
static_assert(Element<FunctionElement> && ComplexScalable<FunctionElement>);
static_assert(Element<QuaternionElement> && !ComplexScalable<QuaternionElement>);

}  // namespace cstar
