// Configuration-driven verification runs and the CSV exporter.
//
// A run is described by a JSON config
//
//   { "algebra": {"blocks": [2,3]}, "module": {"rows": [3,1]},
//     "seed": 42, "samples": 200, "fd_step": 1e-4,
//     "tol_analytic": 1e-8, "tol_fd": 1e-5, "suites": ["algebra", ...] }
//
// (all keys optional, defaults shown for the scalar fields).  Each suite
// executes `samples` independent cases; case i of suite S draws its seed as
// derive_seed(seed, S, i), so results do not depend on execution order and
// cases may run in parallel.  Suites checking exact identities compare
// their worst residual against tol_analytic; suites that involve finite
// differences compare against tol_fd.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncg/module.hpp"

namespace ncg {

struct RunConfig {
  std::vector<int> blocks{2, 3};
  std::vector<int> rows{3, 1};
  std::uint64_t seed = 42;
  int samples = 200;
  double fd_step = 1e-4;
  double tol_analytic = 1e-8;
  double tol_fd = 1e-5;
  std::vector<std::string> suites;  // empty = all, in canonical order

  static const std::vector<std::string>& known_suites();

  // Both throw validation_error with a diagnostic on bad input; validate()
  // is already applied.
  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_json_file(const std::string& path);

  // Block dimensions 1..16, matching row list, positive samples/steps/tols,
  // known suite names.
  void validate() const;

  std::vector<std::string> effective_suites() const;
  AlgebraShape algebra_shape() const { return AlgebraShape(blocks); }
  ModuleShape module_shape() const { return ModuleShape(AlgebraShape(blocks), rows); }
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;  // informational; not serialized
  bool pass = false;
  std::int64_t elapsed_ms = 0;
};

struct RunReport {
  RunConfig config;
  std::vector<SuiteReport> suites;
  bool pass = false;

  // Deterministic serialization: fixed key order, no timing outside the
  // per-suite "elapsed" fields.
  std::string to_json() const;
};

// True for suites whose residuals come from finite-difference paths.
bool suite_uses_fd_tolerance(const std::string& name);

// Runs one suite; `threads` > 0 pins the OpenMP team size, 0 uses the
// runtime default.  Throws validation_error for unknown names.
SuiteReport run_suite(const std::string& name, const RunConfig& config, int threads = 0);

// Serial reference of the same computation (identical residuals).
SuiteReport run_suite_serial(const std::string& name, const RunConfig& config);

// Runs config.effective_suites() in order.
RunReport run_suites(const RunConfig& config, int threads = 0);

// --- export ---------------------------------------------------------------

struct ExportSpec {
  BlockId block = 1;   // must name a two-dimensional block
  Matrix observable;   // 2 x 2
  int grid = 2;        // grid points per angle
};

// Resolves an observable argument: one of the names sigma_x, sigma_y,
// sigma_z, identity (placed on the first two-dimensional block, or on
// `block` when given), or a path to a JSON file {"block": k, "matrix":
// [[a,b],[c,d]]} with entries either numbers or [re, im] pairs.
ExportSpec resolve_export(const RunConfig& config, const std::string& observable, int grid,
                          std::optional<BlockId> block);

// Writes "theta,phi,re_f,im_f,section_norm" rows over the sphere grid
// theta_i = i*pi/(grid-1), phi_j = 2*pi*j/grid of states
// cos(theta/2) e1 + e^{i phi} sin(theta/2) e2 in the chosen block.  The
// section column is the fiber norm of the constant section of a module
// element drawn deterministically from the config seed.
void write_export_csv(const RunConfig& config, const ExportSpec& spec, std::ostream& out);

}  // namespace ncg
