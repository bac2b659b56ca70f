#include "cstar/algebra.hpp"

#include <algorithm>

#include "cstar/cxdense.hpp"

namespace cstar {

double BlockElement::norm() const {
  if (k_ == 0) return 0.0;
  return detail::spectral_norm_complex(m_, k_);
}

double FunctionElement::sup_norm(int refine) const {
  const int g = grid_size();
  if (refine < g)
    throw PreconditionViolation("sup_norm refinement must be at least the grid size");
  double best = 0.0;
  for (const Complex& v : samples_) best = std::max(best, std::abs(v));
  if (refine > g) {
    std::vector<double> nodes = interp::lobatto_nodes(g, lo_, hi_);
    std::vector<double> w = interp::lobatto_weights(g);
    std::vector<double> fine = interp::lobatto_nodes(refine, lo_, hi_);
    for (double t : fine)
      best = std::max(best, std::abs(interp::barycentric_eval(nodes, w, samples_, t)));
  }
  return best;
}

BlockElement quat_to_block(const QuaternionElement& q) {
  BlockElement m(2);
  m.at(0, 0) = Complex(q.a(), q.b());
  m.at(0, 1) = Complex(q.c(), q.d());
  m.at(1, 0) = Complex(-q.c(), q.d());
  m.at(1, 1) = Complex(q.a(), -q.b());
  return m;
}

QuaternionElement block_to_quat(const BlockElement& m) {
  if (m.k() != 2) throw IncompatibleOperands("quaternion image must be 2x2");
  const double a = 0.5 * (m.at(0, 0).real() + m.at(1, 1).real());
  const double b = 0.5 * (m.at(0, 0).imag() - m.at(1, 1).imag());
  const double c = 0.5 * (m.at(0, 1).real() - m.at(1, 0).real());
  const double d = 0.5 * (m.at(0, 1).imag() + m.at(1, 0).imag());
  return QuaternionElement(a, b, c, d);
}

}  // namespace cstar
