// Command line front end: `ncg verify` runs configured suites and writes a
// JSON report, `ncg export` samples a qubit observable over a sphere grid
// into CSV.  Exit codes: 0 success, 1 suite or I/O failure, 2 bad input.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ncg/harness.hpp"

namespace {

int run_verify(const std::string& config_path, std::optional<std::uint64_t> seed,
               std::optional<int> samples, const std::string& report_path, int threads) {
  ncg::RunConfig config;
  if (!config_path.empty()) config = ncg::RunConfig::from_json_file(config_path);
  if (seed) config.seed = *seed;
  if (samples) config.samples = *samples;
  config.validate();

  const ncg::RunReport report = ncg::run_suites(config, threads);
  for (const ncg::SuiteReport& s : report.suites) {
    std::printf("%-15s cases %5d  max_residual %10.3e  tol %.0e  %s\n", s.suite.c_str(),
                s.cases, s.max_residual, s.tolerance, s.pass ? "pass" : "FAIL");
  }
  std::printf("overall: %s\n", report.pass ? "pass" : "FAIL");

  std::ofstream out(report_path);
  if (!out) {
    std::cerr << "error: cannot open report file '" << report_path << "'\n";
    return 1;
  }
  out << report.to_json();
  if (!out) {
    std::cerr << "error: failed writing report file '" << report_path << "'\n";
    return 1;
  }
  return report.pass ? 0 : 1;
}

int run_export(const std::string& config_path, const std::string& observable, int grid,
               const std::string& out_path, std::optional<int> block) {
  ncg::RunConfig config;
  if (!config_path.empty()) config = ncg::RunConfig::from_json_file(config_path);
  const ncg::ExportSpec spec = ncg::resolve_export(config, observable, grid, block);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 1;
  }
  ncg::write_export_csv(config, spec, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block matrix algebras over their pure-state geometry"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification suites, write a JSON report");
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::string report_path = "report.json";
  int threads = 0;
  verify->add_option("--config", config_path, "config JSON path (omit for defaults)");
  verify->add_option("--seed", seed, "override the root seed");
  verify->add_option("--samples", samples, "override cases per suite");
  verify->add_option("--report", report_path, "report output path")
      ->capture_default_str();
  verify->add_option("--threads", threads, "worker threads (0 = runtime default)");

  auto* exporter = app.add_subcommand("export", "sample an observable on a sphere grid as CSV");
  std::string ex_config;
  std::string observable;
  int grid = 0;
  std::string out_path;
  std::optional<int> block;
  exporter->add_option("--config", ex_config, "config JSON path (omit for defaults)");
  exporter->add_option("--observable", observable,
                       "sigma_x|sigma_y|sigma_z|identity or a JSON file")
      ->required();
  exporter->add_option("--grid", grid, "grid points per angle")->required();
  exporter->add_option("--out", out_path, "CSV output path")->required();
  exporter->add_option("--block", block, "block label to sample (default: first 2-dim block)");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) {
      return run_verify(config_path, seed, samples, report_path, threads);
    }
    return run_export(ex_config, observable, grid, out_path, block);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ncg::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ncg::unsupported_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ncg::shape_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
