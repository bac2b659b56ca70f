#pragma once

#include <string>
#include <vector>

#include "cstar/approx.hpp"
#include "cstar/matrix.hpp"

namespace cstar {

enum class BoundKind { HermitianBernstein, NonnormalTaylor };
enum class DistanceMode { Band, Graph };

// A certified decay-bound family: ||[f(A)]_ij|| <= prefactor * ratio^dist.
// `base` is the undivided ratio (1/chi for the Bernstein family, r/R for
// the Taylor family); the per-side ratios carry the 1/p and 1/s roots.
// In graph mode the base itself is the ratio, since the geodetic distance
// already absorbs the bandwidth.
struct DecayBound {
  BoundKind kind = BoundKind::HermitianBernstein;
  DistanceMode distance = DistanceMode::Band;
  double prefactor = 0.0;
  double base = 0.0;         // 1/chi or r/R
  int m = 1, p = 1, s = 1;
  double ratio = 0.0;        // base^(1/m)
  double ratio_lower = 0.0;  // base^(1/p), applied when i > j
  double ratio_upper = 0.0;  // base^(1/s), applied when i < j
  double theta = 0.0;        // -ln(ratio)
  bool certified = true;     // false when the conjectured Crouzeix Q=2 is used
};

// Bernstein-ellipse bound for Hermitian A with spectrum in [-1, 1]:
// c = max(norm_fA, 2 M(f)/(chi - 1)), zeta = chi^(-1/m), with
// M(f) = max over the ellipse E_chi. norm_fA must be a valid upper bound
// for ||f(A)|| (op_norm_upper of the evaluated result, or Q * M(f)).
DecayBound bernstein_bound(const ScalarFn& f, double chi, int m, double norm_fA);

// Taylor-disk bound with the Crouzeix constant, for general (nonnormal) A
// whose numerical range lies in the disk of radius r:
// K = max(norm_fA, Q M(R) r/(R - r)), lambda = (r/R)^(1/m).
DecayBound taylor_bound(const ScalarFn& f, double r, double R, int m, double q_const,
                        double norm_fA);

// Per-side ratios for asymmetric bandwidths: base^(1/p) below the diagonal,
// base^(1/s) above.
std::pair<double, double> asymmetric_ratios(double base, int p, int s);

// Rewrites a band bound for a matrix with lower bandwidth p and upper
// bandwidth s; the decay exponent halves where the band is twice as wide.
DecayBound with_asymmetry(DecayBound b, int p, int s);

// Reinterprets the bound over geodetic distances (ratio = base, m = 1).
DecayBound as_graph_bound(DecayBound b);

// Enclosure radius for the closure of the numerical range: ||A-hat||_2.
template <Element E>
double fov_disk_radius(const CStarMatrix<E>& a) {
  return op_norm_upper(a);
}

// Materialize a band-mode bound: B_ij = prefactor * ratio_lower^(i-j) for
// i >= j and prefactor * ratio_upper^(j-i) for i < j. A side with zero
// structural bandwidth gets a zero bound off the diagonal on that side.
RealNonnegMatrix bound_matrix(const DecayBound& b, const Bandwidths& bw, int n);

// Graph mode: B_ij = prefactor * ratio^d(i,j); unreachable pairs get 0.
RealNonnegMatrix bound_matrix(const DecayBound& b, const DistanceMatrix& dist);

// Pointwise-minimal envelope over a family of Bernstein bounds.
struct ChiEnvelope {
  std::vector<double> admissible_chis;
  std::vector<std::string> warnings;     // skipped chis with the reason
  std::vector<double> value_per_offset;  // min_chi c(chi) zeta(chi)^offset
  std::vector<double> chi_per_offset;    // the minimizer
};

// For each band offset 0..n-1, the best bound over the admissible subset of
// `chis`. Inadmissible ellipses (f singular inside) are skipped with a
// warning rather than failing the whole family.
ChiEnvelope optimize_chi(const ScalarFn& f, const std::vector<double>& chis, int m,
                         double norm_fA, int n);

// Band-mode bound matrix built from an envelope.
RealNonnegMatrix envelope_bound_matrix(const ChiEnvelope& env, int n);

}  // namespace cstar
