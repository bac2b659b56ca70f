#include "cstar/report.hpp"

#include <chrono>
#include <cfloat>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cstar/decay.hpp"
#include "cstar/examples.hpp"
#include "cstar/funcalc.hpp"

namespace cstar {

namespace {

using json = nlohmann::ordered_json;

ScalarFn scalar_function(const std::string& name) {
  if (name == "exp") return [](Complex z) { return std::exp(z); };
  if (name == "log_shift5") return [](Complex z) { return std::log(z + 5.0); };
  if (name == "identity") return [](Complex z) { return z; };
  if (name == "inverse_neumann")
    return [](Complex z) { return 1.0 / (1.0 - z); };  // acts on W = I - C
  throw UnknownExample("unknown function name: " + name);
}

// Real-coefficient series for the quaternion route.
PowerSeries power_series_for(const std::string& name, int len) {
  if (name == "exp") return PowerSeries::exponential(len);
  if (name == "log_shift5") {
    PowerSeries p;
    p.coeffs.resize(len + 1);
    p.coeffs[0] = std::log(5.0);
    double pw = 1.0;
    for (int j = 1; j <= len; ++j) {
      pw /= 5.0;
      p.coeffs[j] = ((j % 2 == 1) ? 1.0 : -1.0) * pw / j;
    }
    p.radius = 5.0;
    return p;
  }
  if (name == "identity") {
    PowerSeries p;
    p.coeffs = {0.0, 1.0};
    p.radius = HUGE_VAL;
    return p;
  }
  throw PreconditionViolation("function " + name + " has no real power series here");
}

std::vector<double> default_chis(const std::string& f_name) {
  if (f_name == "log_shift5") return {2.0, 5.0, 9.0};
  return {1.5, 2.0, 5.0, 20.0};
}

double max_violation(const RealNonnegMatrix& norms, const RealNonnegMatrix& bounds,
                     std::vector<std::string>& warnings) {
  const int n = norms.order();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double b = bounds.at(i, j);
      const double v = norms.at(i, j);
      if (b == 0.0) {
        if (v != 0.0) {
          warnings.push_back("nonzero entry under a structural zero bound");
          return DBL_MAX;
        }
      } else {
        worst = std::max(worst, v / b);
      }
    }
  return worst;
}

// Smallest k making the Taylor-disk certificate M/(1-q) q^{k+1} < tol.
int taylor_degree_for(double mR, double q, double tol) {
  const double target = tol * (1.0 - q) / mR;
  if (target >= 1.0) return 1;
  int k = static_cast<int>(std::ceil(std::log(target) / std::log(q))) - 1;
  return std::min(std::max(k, 1), 256);
}

struct BoundInputs {
  Bandwidths bw;
  DistanceMatrix dist;
  double norm_fa = 0.0;
};

// Synthesize the configured bound family and verify it.
void attach_bound(VerificationReport& rep, const PipelineConfig& cfg,
                  const ScalarFn& f, const BoundInputs& in, bool hermitian,
                  double taylor_r) {
  rep.m = in.bw.m;
  rep.p = in.bw.p;
  rep.s = in.bw.s;
  rep.norm_fa_source = "op_norm_upper(f(A))";
  const std::vector<double> chis = cfg.chis.empty() ? default_chis(rep.f_name)
                                                    : cfg.chis;
  if (rep.bound_kind == "hermitian-bernstein") {
    if (!hermitian)
      throw PreconditionViolation(
          "hermitian-bernstein bound requested for a non-Hermitian matrix");
    ChiEnvelope env = optimize_chi(f, chis, std::max(in.bw.m, 1), in.norm_fa, rep.n);
    rep.chis = env.admissible_chis;
    for (const std::string& w : env.warnings) rep.warnings.push_back(w);
    rep.bounds = envelope_bound_matrix(env, rep.n);
  } else if (rep.bound_kind == "nonnormal-taylor") {
    const double r = taylor_r;
    const double R = cfg.R > 0.0 ? cfg.R : 2.0 * r;
    DecayBound b = taylor_bound(f, r, R, std::max(in.bw.m, 1), cfg.q_const, in.norm_fa);
    b = with_asymmetry(b, std::max(in.bw.p, 1), std::max(in.bw.s, 1));
    rep.r = r;
    rep.R = R;
    rep.q_const = cfg.q_const;
    rep.certified = b.certified;
    rep.bounds = bound_matrix(b, in.bw, rep.n);
  } else if (rep.bound_kind == "graph") {
    DecayBound b;
    if (hermitian) {
      b = as_graph_bound(bernstein_bound(f, chis.front(), 1, in.norm_fa));
      rep.chis = {chis.front()};
    } else {
      const double r = taylor_r;
      const double R = cfg.R > 0.0 ? cfg.R : 2.0 * r;
      b = as_graph_bound(taylor_bound(f, r, R, 1, cfg.q_const, in.norm_fa));
      rep.r = r;
      rep.R = R;
      rep.q_const = cfg.q_const;
      rep.certified = b.certified;
    }
    rep.bounds = bound_matrix(b, in.dist);
  } else {
    throw UnknownExample("unknown bound kind: " + rep.bound_kind);
  }
  rep.max_violation_ratio = max_violation(rep.entry_norms, rep.bounds, rep.warnings);
}

VerificationReport run_function_example(const PipelineConfig& cfg) {
  VerificationReport rep;
  rep.matrix_id = cfg.example_id;
  rep.f_name = cfg.f_name;
  rep.bound_kind = cfg.bound_kind;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  rep.grid = cfg.grid;
  rep.tol = cfg.tol;

  if (cfg.example_id == "ex1") {
    const CStarMatrix<FunctionElement> c = examples::ex1_bidiagonal(cfg.n, cfg.grid);
    if (cfg.f_name == "inverse_neumann") {
      // C^{-1} through the exact finite Neumann series in W = I - C; the
      // decay bound is the Taylor-disk family for 1/(1-w) applied to W.
      const CStarMatrix<FunctionElement> w =
          CStarMatrix<FunctionElement>::identity(cfg.n, c.prototype()) - c;
      const CStarMatrix<FunctionElement> inv = neumann_inverse(c);
      rep.entry_norms = entry_norm_matrix(inv);
      rep.degree = cfg.n - 1;
      rep.truncation_certificate = 0.0;  // nilpotent series, no truncation
      BoundInputs in{bandwidths(w), graph_distances(w), op_norm_upper(inv)};
      attach_bound(rep, cfg, scalar_function("inverse_neumann"), in, false,
                   op_norm_upper(w));
      return rep;
    }
    const ScalarFn f = scalar_function(cfg.f_name);
    const double r = op_norm_upper(c);
    const double R = cfg.R > 0.0 ? cfg.R : 2.0 * r;
    const int k = taylor_degree_for(disk_max(f, R), r / R, cfg.tol);
    MatFunResult<FunctionElement> res = matfun_taylor(c, f, R, k);
    rep.entry_norms = entry_norm_matrix(res.value);
    rep.degree = res.degree;
    rep.truncation_certificate = res.certificate;
    BoundInputs in{bandwidths(c), graph_distances(c), op_norm_upper(res.value)};
    attach_bound(rep, cfg, f, in, false, r);
    return rep;
  }

  if (cfg.example_id == "ex2" || cfg.example_id == "ex3") {
    const CStarMatrix<FunctionElement> a = examples::ex2_cct(cfg.n, cfg.grid);
    if (cfg.f_name == "inverse_neumann") {
      // A^{-1} = (C^{-1})* C^{-1}, exact. The spectrum enclosure
      // [1/||A^{-1}||, ||A||] maps 1/z onto a Bernstein-admissible function.
      const CStarMatrix<FunctionElement> cinv =
          neumann_inverse(examples::ex1_bidiagonal(cfg.n, cfg.grid));
      const CStarMatrix<FunctionElement> inv = cinv.adjoint() * cinv;
      rep.entry_norms = entry_norm_matrix(inv);
      rep.degree = cfg.n - 1;
      rep.truncation_certificate = 0.0;
      const double alpha = 1.0 / op_norm_upper(inv);
      const double beta = op_norm_upper(a);
      const double width = beta - alpha;
      const double center = beta + alpha;
      const ScalarFn g = [width, center](Complex u) {
        return 2.0 / (width * u + center);
      };
      PipelineConfig cfg_local = cfg;
      if (cfg_local.chis.empty()) {
        const double u0 = center / width;  // pole location in scaled variable
        const double chi_pole = u0 + std::sqrt(u0 * u0 - 1.0);
        for (double frac : {0.25, 0.5, 0.75, 0.9})
          cfg_local.chis.push_back(1.0 + frac * (chi_pole - 1.0));
      }
      BoundInputs in{bandwidths(a), graph_distances(a), op_norm_upper(inv)};
      attach_bound(rep, cfg_local, g, in, true, 0.0);
      return rep;
    }
    const ScalarFn f = scalar_function(cfg.f_name);
    const double beta = op_norm_upper(a);
    const CStarMatrix<FunctionElement> b = scale_shift_hermitian(a, -beta, beta);
    MatFunResult<FunctionElement> res = matfun_hermitian(b, f, cfg.tol);
    rep.entry_norms = entry_norm_matrix(res.value);
    rep.degree = res.degree;
    rep.truncation_certificate = res.certificate;
    BoundInputs in{bandwidths(b), graph_distances(b), op_norm_upper(res.value)};
    attach_bound(rep, cfg, f, in, true, 1.0);
    return rep;
  }

  // ex4 / ex4bis: scale to [-1,1], evaluate with the Chebyshev pipeline.
  const CStarMatrix<FunctionElement> a =
      (cfg.example_id == "ex4") ? examples::ex4_toeplitz(cfg.n, cfg.grid)
                                : examples::ex4bis_pattern(cfg.n, cfg.grid);
  const ScalarFn f = scalar_function(cfg.f_name);
  const double beta = op_norm_upper(a);
  const CStarMatrix<FunctionElement> b = scale_shift_hermitian(a, -beta, beta);
  MatFunResult<FunctionElement> res = matfun_hermitian(b, f, cfg.tol);
  rep.entry_norms = entry_norm_matrix(res.value);
  rep.degree = res.degree;
  rep.truncation_certificate = res.certificate;
  BoundInputs in{bandwidths(b), graph_distances(b), op_norm_upper(res.value)};
  attach_bound(rep, cfg, f, in, true, 1.0);
  return rep;
}

VerificationReport run_block_example(const PipelineConfig& cfg) {
  VerificationReport rep;
  rep.matrix_id = cfg.example_id;
  rep.f_name = cfg.f_name;
  rep.bound_kind = cfg.bound_kind;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  rep.tol = cfg.tol;

  const CStarMatrix<BlockElement> a = examples::ex6_block_banded(cfg.n, cfg.seed);
  const ScalarFn f = scalar_function(cfg.f_name);
  const double r = op_norm_upper(a);
  const double R = cfg.R > 0.0 ? cfg.R : 2.0 * r;
  const int k = taylor_degree_for(disk_max(f, R), r / R, cfg.tol);
  MatFunResult<BlockElement> res = matfun_taylor(a, f, R, k);
  rep.entry_norms = entry_norm_matrix(res.value);
  rep.degree = res.degree;
  rep.truncation_certificate = res.certificate;
  BoundInputs in{bandwidths(a), graph_distances(a), op_norm_upper(res.value)};
  attach_bound(rep, cfg, f, in, false, r);
  return rep;
}

VerificationReport run_quaternion_example(const PipelineConfig& cfg) {
  VerificationReport rep;
  rep.matrix_id = cfg.example_id;
  rep.f_name = cfg.f_name;
  rep.bound_kind = cfg.bound_kind;
  rep.n = cfg.n;
  rep.seed = cfg.seed;
  rep.tol = cfg.tol;

  const CStarMatrix<QuaternionElement> a =
      (cfg.example_id == "ex7a")
          ? examples::ex7a_quaternion_tridiagonal(cfg.n, cfg.seed)
          : examples::ex7b_quaternion_sparse(cfg.n, cfg.seed);
  const double beta = op_norm_upper(a);
  const CStarMatrix<QuaternionElement> b = scale_shift_hermitian(a, -beta, beta);

  const int k = 30;
  const PowerSeries series = power_series_for(cfg.f_name, k + 15);
  MatFunResult<QuaternionElement> res = matfun_quaternion(b, series, k);
  rep.entry_norms = entry_norm_matrix(res.value);
  rep.degree = res.degree;
  rep.truncation_certificate = res.certificate;

  const ScalarFn f = scalar_function(cfg.f_name);
  BoundInputs in{bandwidths(b), graph_distances(b), op_norm_upper(res.value)};
  attach_bound(rep, cfg, f, in, true, 1.0);
  return rep;
}

json matrix_to_json(const RealNonnegMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

RealNonnegMatrix matrix_from_json(const json& rows) {
  const int n = static_cast<int>(rows.size());
  RealNonnegMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j].get<double>();
  return m;
}

}  // namespace

std::string default_f(const std::string& example_id) {
  if (example_id == "ex1" || example_id == "ex2") return "inverse_neumann";
  if (example_id == "ex4bis") return "log_shift5";
  return "exp";
}

std::string default_bound(const std::string& example_id) {
  if (example_id == "ex1" || example_id == "ex7b") return "graph";
  if (example_id == "ex6") return "nonnormal-taylor";
  return "hermitian-bernstein";
}

VerificationReport run_pipeline(const PipelineConfig& cfg_in) {
  PipelineConfig cfg = cfg_in;
  if (cfg.n < 2) throw PreconditionViolation("demo matrices need n >= 2");
  if (cfg.f_name.empty()) cfg.f_name = default_f(cfg.example_id);
  if (cfg.bound_kind.empty()) cfg.bound_kind = default_bound(cfg.example_id);
  if (cfg.f_name == "inverse_neumann" && cfg.example_id != "ex1" &&
      cfg.example_id != "ex2" && cfg.example_id != "ex3")
    throw PreconditionViolation("inverse_neumann applies to ex1/ex2 only");

  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  if (cfg.example_id == "ex1" || cfg.example_id == "ex2" ||
      cfg.example_id == "ex3" || cfg.example_id == "ex4" ||
      cfg.example_id == "ex4bis") {
    rep = run_function_example(cfg);
  } else if (cfg.example_id == "ex6") {
    rep = run_block_example(cfg);
  } else if (cfg.example_id == "ex7a" || cfg.example_id == "ex7b") {
    rep = run_quaternion_example(cfg);
  } else {
    throw UnknownExample("unknown example id: " + cfg.example_id);
  }
  rep.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

std::string to_json(const VerificationReport& rep) {
  json j;
  j["matrix_id"] = rep.matrix_id;
  j["f_name"] = rep.f_name;
  j["bound_kind"] = rep.bound_kind;
  j["n"] = rep.n;
  j["seed"] = rep.seed;
  j["grid"] = rep.grid;
  j["chis"] = rep.chis;
  j["r"] = rep.r;
  j["R"] = rep.R;
  j["Q"] = rep.q_const;
  j["m"] = rep.m;
  j["p"] = rep.p;
  j["s"] = rep.s;
  j["degree"] = rep.degree;
  j["tol"] = rep.tol;
  j["norm_fa_source"] = rep.norm_fa_source;
  j["certified"] = rep.certified;
  j["warnings"] = rep.warnings;
  j["entry_norms"] = matrix_to_json(rep.entry_norms);
  j["bounds"] = matrix_to_json(rep.bounds);
  j["max_violation_ratio"] = rep.max_violation_ratio;
  j["truncation_certificate"] = rep.truncation_certificate;
  j["runtime_ms"] = rep.runtime_ms;
  return j.dump(2);
}

VerificationReport parse_json_report(const std::string& text) {
  const json j = json::parse(text);
  VerificationReport rep;
  rep.matrix_id = j.at("matrix_id").get<std::string>();
  rep.f_name = j.at("f_name").get<std::string>();
  rep.bound_kind = j.at("bound_kind").get<std::string>();
  rep.n = j.at("n").get<int>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.grid = j.at("grid").get<int>();
  rep.chis = j.at("chis").get<std::vector<double>>();
  rep.r = j.at("r").get<double>();
  rep.R = j.at("R").get<double>();
  rep.q_const = j.at("Q").get<double>();
  rep.m = j.at("m").get<int>();
  rep.p = j.at("p").get<int>();
  rep.s = j.at("s").get<int>();
  rep.degree = j.at("degree").get<int>();
  rep.tol = j.at("tol").get<double>();
  rep.norm_fa_source = j.at("norm_fa_source").get<std::string>();
  rep.certified = j.at("certified").get<bool>();
  rep.warnings = j.at("warnings").get<std::vector<std::string>>();
  rep.entry_norms = matrix_from_json(j.at("entry_norms"));
  rep.bounds = matrix_from_json(j.at("bounds"));
  rep.max_violation_ratio = j.at("max_violation_ratio").get<double>();
  rep.truncation_certificate = j.at("truncation_certificate").get<double>();
  rep.runtime_ms = j.at("runtime_ms").get<double>();
  return rep;
}

std::string emit(const VerificationReport& rep, const std::string& format,
                 const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoFailure("cannot create output directory " + out_dir);
  const std::string stem =
      rep.matrix_id + "_" + rep.f_name + "_" + rep.bound_kind;

  if (format == "csv") {
    const std::string path = (fs::path(out_dir) / (stem + ".csv")).string();
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open " + path);
    out << "i,j,entry_norm,bound\n";
    char line[128];
    for (int i = 0; i < rep.entry_norms.order(); ++i)
      for (int j = 0; j < rep.entry_norms.order(); ++j) {
        std::snprintf(line, sizeof(line), "%d,%d,%.17g,%.17g\n", i + 1, j + 1,
                      rep.entry_norms.at(i, j), rep.bounds.at(i, j));
        out << line;
      }
    if (!out) throw IoFailure("write failed for " + path);
    return path;
  }
  if (format == "json") {
    const std::string path = (fs::path(out_dir) / (stem + ".json")).string();
    std::ofstream out(path);
    if (!out) throw IoFailure("cannot open " + path);
    out << to_json(rep) << "\n";
    if (!out) throw IoFailure("write failed for " + path);
    return path;
  }
  throw UnknownExample("unknown report format: " + format);
}

}  // namespace cstar
