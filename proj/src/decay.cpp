#include "cstar/decay.hpp"

#include <cmath>

namespace cstar {

DecayBound bernstein_bound(const ScalarFn& f, double chi, int m, double norm_fA) {
  if (m < 1) throw PreconditionViolation("bandwidth m must be >= 1");
  if (norm_fA < 0.0) throw PreconditionViolation("norm_fA must be nonnegative");
  const BernsteinEllipse e(chi);
  const double mf = ellipse_max(f, e);
  DecayBound b;
  b.kind = BoundKind::HermitianBernstein;
  b.prefactor = std::max(norm_fA, 2.0 * mf / (chi - 1.0));
  b.base = 1.0 / chi;
  b.m = b.p = b.s = m;
  b.ratio = b.ratio_lower = b.ratio_upper = std::pow(b.base, 1.0 / m);
  b.theta = -std::log(b.ratio);
  return b;
}

DecayBound taylor_bound(const ScalarFn& f, double r, double R, int m,
                        double q_const, double norm_fA) {
  if (m < 1) throw PreconditionViolation("bandwidth m must be >= 1");
  if (!(0.0 < r && r < R)) throw InvalidRadius("taylor_bound requires 0 < r < R");
  const double mR = disk_max(f, R);
  DecayBound b;
  b.kind = BoundKind::NonnormalTaylor;
  b.prefactor = std::max(norm_fA, q_const * mR * r / (R - r));
  b.base = r / R;
  b.m = b.p = b.s = m;
  b.ratio = b.ratio_lower = b.ratio_upper = std::pow(b.base, 1.0 / m);
  b.theta = -std::log(b.ratio);
  b.certified = q_const >= 11.08;
  return b;
}

std::pair<double, double> asymmetric_ratios(double base, int p, int s) {
  if (p < 1 || s < 1)
    throw PreconditionViolation("asymmetric ratios require p, s >= 1");
  if (!(0.0 < base && base < 1.0))
    throw PreconditionViolation("base ratio must lie in (0, 1)");
  return {std::pow(base, 1.0 / p), std::pow(base, 1.0 / s)};
}

DecayBound with_asymmetry(DecayBound b, int p, int s) {
  const auto [l1, l2] = asymmetric_ratios(b.base, p, s);
  b.p = p;
  b.s = s;
  b.m = std::max(p, s);
  b.ratio_lower = l1;
  b.ratio_upper = l2;
  b.ratio = std::pow(b.base, 1.0 / b.m);
  b.theta = -std::log(b.ratio);
  return b;
}

DecayBound as_graph_bound(DecayBound b) {
  b.distance = DistanceMode::Graph;
  b.m = b.p = b.s = 1;
  b.ratio = b.ratio_lower = b.ratio_upper = b.base;
  b.theta = -std::log(b.ratio);
  return b;
}

RealNonnegMatrix bound_matrix(const DecayBound& b, const Bandwidths& bw, int n) {
  RealNonnegMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        out.at(i, j) = b.prefactor;
      } else if (i > j) {
        out.at(i, j) = (bw.p == 0) ? 0.0 : b.prefactor * std::pow(b.ratio_lower, i - j);
      } else {
        out.at(i, j) = (bw.s == 0) ? 0.0 : b.prefactor * std::pow(b.ratio_upper, j - i);
      }
    }
  return out;
}

RealNonnegMatrix bound_matrix(const DecayBound& b, const DistanceMatrix& dist) {
  const int n = dist.order();
  RealNonnegMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (dist.is_unreachable(i, j) && i != j) continue;  // structural zero
      out.at(i, j) = b.prefactor * std::pow(b.ratio, dist.at(i, j));
    }
  return out;
}

ChiEnvelope optimize_chi(const ScalarFn& f, const std::vector<double>& chis, int m,
                         double norm_fA, int n) {
  ChiEnvelope env;
  std::vector<DecayBound> bounds;
  for (double chi : chis) {
    try {
      bounds.push_back(bernstein_bound(f, chi, m, norm_fA));
      env.admissible_chis.push_back(chi);
    } catch (const RegionViolation& rv) {
      env.warnings.push_back("chi=" + std::to_string(chi) + " skipped: " + rv.what());
    }
  }
  if (bounds.empty())
    throw RegionViolation("no admissible chi in the requested family");
  env.value_per_offset.resize(n);
  env.chi_per_offset.resize(n);
  for (int d = 0; d < n; ++d) {
    double best = HUGE_VAL, best_chi = 0.0;
    for (std::size_t t = 0; t < bounds.size(); ++t) {
      const double v = bounds[t].prefactor * std::pow(bounds[t].ratio, d);
      if (v < best) {
        best = v;
        best_chi = env.admissible_chis[t];
      }
    }
    env.value_per_offset[d] = best;
    env.chi_per_offset[d] = best_chi;
  }
  return env;
}

RealNonnegMatrix envelope_bound_matrix(const ChiEnvelope& env, int n) {
  RealNonnegMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = env.value_per_offset[std::abs(i - j)];
  return out;
}

}  // namespace cstar
