#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cstar/real_matrix.hpp"

namespace cstar {

// One evaluate -> bound -> verify run.
struct PipelineConfig {
  std::string example_id;        // ex1 ex2 ex3 ex4 ex4bis ex6 ex7a ex7b
  int n = 20;
  std::uint64_t seed = 7;
  std::string f_name;            // exp log_shift5 inverse_neumann identity
  std::string bound_kind;        // hermitian-bernstein nonnormal-taylor graph
  std::vector<double> chis;      // Bernstein families; empty -> per-f default
  double R = 0.0;                // Taylor sampling radius; 0 -> 2 * r
  double q_const = 11.08;        // Crouzeix constant (2 = conjectured, not certified)
  int grid = 201;                // Lobatto grid for function entries
  double tol = 1e-12;            // truncation target for the evaluation
};

struct VerificationReport {
  std::string matrix_id;
  std::string f_name;
  std::string bound_kind;
  int n = 0;
  std::uint64_t seed = 0;
  int grid = 0;
  std::vector<double> chis;      // admissible chis actually used
  double r = 0.0;                // field-of-values radius (Taylor kind)
  double R = 0.0;
  double q_const = 0.0;
  int m = 0, p = 0, s = 0;
  int degree = 0;
  double tol = 0.0;
  std::string norm_fa_source;    // which ||f(A)|| upper bound fed the prefactor
  bool certified = true;
  std::vector<std::string> warnings;
  RealNonnegMatrix entry_norms;
  RealNonnegMatrix bounds;
  double max_violation_ratio = 0.0;
  double truncation_certificate = 0.0;
  double runtime_ms = 0.0;
};

// Default f and bound kind for an example id.
std::string default_f(const std::string& example_id);
std::string default_bound(const std::string& example_id);

// Generate the demo matrix, evaluate f, synthesize the configured decay
// bound, and verify it entrywise. Throws UnknownExample for bad ids and
// PreconditionViolation for incompatible (example, f, bound) combinations.
VerificationReport run_pipeline(const PipelineConfig& cfg);

// Write the report into `out_dir` as CSV (i,j,entry_norm,bound rows) or
// JSON (full report, deterministic field order). Returns the file path.
std::string emit(const VerificationReport& rep, const std::string& format,
                 const std::string& out_dir);

// JSON round trip.
std::string to_json(const VerificationReport& rep);
VerificationReport parse_json_report(const std::string& text);

}  // namespace cstar
