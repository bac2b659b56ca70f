#pragma once

#include <vector>

#include "cstar/error.hpp"

namespace cstar {

// Entrywise-nonnegative real n x n matrix. Holds the matricial norm A-hat
// and the entry-norm / bound surfaces produced by the pipelines.
class RealNonnegMatrix {
 public:
  RealNonnegMatrix() : n_(0) {}
  explicit RealNonnegMatrix(int n) : n_(n), v_(static_cast<std::size_t>(n) * n, 0.0) {}

  int order() const { return n_; }
  double& at(int i, int j) { return v_[static_cast<std::size_t>(i) * n_ + j]; }
  const double& at(int i, int j) const { return v_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& data() const { return v_; }

  void set(int i, int j, double value) {
    if (value < 0.0) throw InvalidElement("RealNonnegMatrix entries must be >= 0");
    at(i, j) = value;
  }

 private:
  int n_;
  std::vector<double> v_;
};

// Largest singular value, by power iteration on M^T M.
// Deterministic all-ones start, relative tolerance 1e-10, at most 5000 steps.
double spectral_norm_2(const RealNonnegMatrix& m, double tol = 1e-10,
                       int max_iter = 5000);

// Spectral radius of an entrywise-nonnegative matrix (its Perron root).
// Power iteration with windowed geometric-mean growth estimates, which also
// converges for imprimitive (periodic) patterns; decay to zero is detected
// exactly for nilpotent inputs. Throws NumericFailure on non-convergence.
double rho_upper(const RealNonnegMatrix& m, double tol = 1e-10,
                 int max_iter = 5000);

}  // namespace cstar
