// Times each suite on the serial reference path and on the OpenMP path and
// checks that both produce the same residual (they must: cases are seeded
// independently and combined with an order-free max).
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "ncg/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel suite timing"};
  std::string config_path;
  int samples = 400;
  int threads = 0;
  app.add_option("--config", config_path, "config JSON path (omit for defaults)");
  app.add_option("--samples", samples, "cases per suite")->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0 = runtime default)");
  CLI11_PARSE(app, argc, argv);

  ncg::RunConfig config;
  try {
    if (!config_path.empty()) config = ncg::RunConfig::from_json_file(config_path);
    config.samples = samples;
    config.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  bool consistent = true;
  std::printf("%-15s %12s %12s %9s\n", "suite", "serial ms", "parallel ms", "speedup");
  for (const std::string& name : config.effective_suites()) {
    const ncg::SuiteReport serial = ncg::run_suite_serial(name, config);
    const ncg::SuiteReport parallel = ncg::run_suite(name, config, threads);
    if (serial.max_residual != parallel.max_residual) {
      consistent = false;
      std::fprintf(stderr, "MISMATCH in %s: serial %.17g vs parallel %.17g\n", name.c_str(),
                   serial.max_residual, parallel.max_residual);
    }
    const double speedup = parallel.elapsed_ms > 0
                               ? static_cast<double>(serial.elapsed_ms) /
                                     static_cast<double>(parallel.elapsed_ms)
                               : 0.0;
    std::printf("%-15s %12lld %12lld %8.2fx\n", name.c_str(),
                static_cast<long long>(serial.elapsed_ms),
                static_cast<long long>(parallel.elapsed_ms), speedup);
  }
  std::printf("residuals identical: %s\n", consistent ? "yes" : "NO");
  return consistent ? 0 : 1;
}
