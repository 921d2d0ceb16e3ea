#include "ncg/harness.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ncg {

const std::vector<std::string>& RunConfig::known_suites() {
  static const std::vector<std::string> names = {
      "algebra", "geometry", "gelfand",    "module",
      "bundle",  "connection", "serre-swan", "reconstruction"};
  return names;
}

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_config(const std::string& message) {
  throw validation_error("config: " + message);
}

void check_keys(const json& object, std::initializer_list<const char*> allowed,
                const std::string& where) {
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) bad_config("unknown key '" + item.key() + "' in " + where);
  }
}

std::vector<int> int_list(const json& value, const std::string& where) {
  if (!value.is_array()) bad_config(where + " must be an array of integers");
  std::vector<int> out;
  for (const auto& entry : value) {
    if (!entry.is_number_integer()) bad_config(where + " must contain only integers");
    out.push_back(entry.get<int>());
  }
  return out;
}

double positive_real(const json& value, const std::string& where) {
  if (!value.is_number()) bad_config(where + " must be a number");
  return value.get<double>();
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_config(std::string("invalid JSON: ") + e.what());
  }
  if (!parsed.is_object()) bad_config("top level must be an object");
  check_keys(parsed,
             {"algebra", "module", "seed", "samples", "fd_step", "tol_analytic", "tol_fd",
              "suites"},
             "config");
  RunConfig cfg;
  if (parsed.contains("algebra")) {
    const json& a = parsed["algebra"];
    if (!a.is_object()) bad_config("algebra must be an object");
    check_keys(a, {"blocks"}, "algebra");
    if (a.contains("blocks")) cfg.blocks = int_list(a["blocks"], "algebra.blocks");
  }
  if (parsed.contains("module")) {
    const json& m = parsed["module"];
    if (!m.is_object()) bad_config("module must be an object");
    check_keys(m, {"rows"}, "module");
    if (m.contains("rows")) cfg.rows = int_list(m["rows"], "module.rows");
  }
  if (parsed.contains("seed")) {
    const json& s = parsed["seed"];
    if (!s.is_number_integer() || (s.is_number_integer() && !s.is_number_unsigned() &&
                                   s.get<std::int64_t>() < 0)) {
      bad_config("seed must be a nonnegative integer");
    }
    cfg.seed = s.get<std::uint64_t>();
  }
  if (parsed.contains("samples")) {
    if (!parsed["samples"].is_number_integer()) bad_config("samples must be an integer");
    cfg.samples = parsed["samples"].get<int>();
  }
  if (parsed.contains("fd_step")) cfg.fd_step = positive_real(parsed["fd_step"], "fd_step");
  if (parsed.contains("tol_analytic")) {
    cfg.tol_analytic = positive_real(parsed["tol_analytic"], "tol_analytic");
  }
  if (parsed.contains("tol_fd")) cfg.tol_fd = positive_real(parsed["tol_fd"], "tol_fd");
  if (parsed.contains("suites")) {
    const json& s = parsed["suites"];
    if (!s.is_array()) bad_config("suites must be an array of strings");
    cfg.suites.clear();
    for (const auto& entry : s) {
      if (!entry.is_string()) bad_config("suites must contain only strings");
      cfg.suites.push_back(entry.get<std::string>());
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad_config("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_text(buffer.str());
}

void RunConfig::validate() const {
  if (blocks.empty()) bad_config("algebra.blocks must be nonempty");
  for (int n : blocks) {
    if (n < 1) bad_config("block dimensions must be positive");
  }
  if (rows.size() != blocks.size()) {
    bad_config("module.rows must have one entry per algebra block");
  }
  for (int d : rows) {
    if (d < 0) bad_config("module.rows entries must be nonnegative");
  }
  if (samples < 1) bad_config("samples must be at least 1");
  if (!(fd_step > 0.0) || !(fd_step < 1.0)) bad_config("fd_step must lie in (0, 1)");
  if (!(tol_analytic > 0.0)) bad_config("tol_analytic must be positive");
  if (!(tol_fd > 0.0)) bad_config("tol_fd must be positive");
  for (const std::string& name : suites) {
    const auto& known = known_suites();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      bad_config("unknown suite '" + name + "'");
    }
  }
}

std::vector<std::string> RunConfig::effective_suites() const {
  return suites.empty() ? known_suites() : suites;
}

bool suite_uses_fd_tolerance(const std::string& name) {
  return name == "geometry" || name == "gelfand" || name == "connection";
}

std::string RunReport::to_json() const {
  ordered_json echo;
  echo["algebra"] = {{"blocks", config.blocks}};
  echo["module"] = {{"rows", config.rows}};
  echo["seed"] = config.seed;
  echo["samples"] = config.samples;
  echo["fd_step"] = config.fd_step;
  echo["tol_analytic"] = config.tol_analytic;
  echo["tol_fd"] = config.tol_fd;
  echo["suites"] = config.effective_suites();

  ordered_json root;
  root["config_echo"] = std::move(echo);
  root["suites"] = ordered_json::array();
  for (const SuiteReport& s : suites) {
    ordered_json entry;
    entry["suite"] = s.suite;
    entry["cases"] = s.cases;
    entry["max_residual"] = s.max_residual;
    entry["pass"] = s.pass;
    entry["elapsed"] = s.elapsed_ms;
    root["suites"].push_back(std::move(entry));
  }
  root["pass"] = pass;
  return root.dump(2) + "\n";
}

RunReport run_suites(const RunConfig& config, int threads) {
  config.validate();
  RunReport report;
  report.config = config;
  report.pass = true;
  for (const std::string& name : config.effective_suites()) {
    report.suites.push_back(run_suite(name, config, threads));
    report.pass = report.pass && report.suites.back().pass;
  }
  return report;
}

}  // namespace ncg
