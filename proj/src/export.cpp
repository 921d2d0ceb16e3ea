#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ncg/bundle.hpp"
#include "ncg/harness.hpp"

#include "json.hpp"

namespace ncg {

namespace {

Matrix named_observable(const std::string& name) {
  Matrix m(2, 2);
  if (name == "sigma_x") {
    m << 0, 1, 1, 0;
  } else if (name == "sigma_y") {
    m << 0, -kI, kI, 0;
  } else if (name == "sigma_z") {
    m << 1, 0, 0, -1;
  } else if (name == "identity") {
    m << 1, 0, 0, 1;
  } else {
    m.resize(0, 0);
  }
  return m;
}

Complex json_entry(const nlohmann::json& e) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return Complex(e[0].get<double>(), e[1].get<double>());
  }
  throw validation_error("export: matrix entries must be numbers or [re, im] pairs");
}

BlockId first_qubit_block(const AlgebraShape& shape) {
  for (BlockId k : spectrum(shape)) {
    if (shape.dim(k) == 2) return k;
  }
  throw unsupported_error("export: no two-dimensional block in the algebra");
}

}  // namespace

ExportSpec resolve_export(const RunConfig& config, const std::string& observable, int grid,
                          std::optional<BlockId> block) {
  if (grid < 2) {
    throw validation_error("export: grid must be at least 2 points per angle");
  }
  const AlgebraShape shape = config.algebra_shape();
  ExportSpec spec;
  spec.grid = grid;
  spec.observable = named_observable(observable);
  if (spec.observable.size() != 0) {
    spec.block = block ? *block : first_qubit_block(shape);
  } else {
    std::ifstream in(observable);
    if (!in) {
      throw validation_error("export: observable '" + observable +
                             "' is not a named observable or a readable file");
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw validation_error(std::string("export: invalid observable JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("matrix")) {
      throw validation_error("export: observable file must be {\"block\": k, \"matrix\": [[..]]}");
    }
    const nlohmann::json& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() || rows[0].size() != 2 ||
        !rows[1].is_array() || rows[1].size() != 2) {
      throw validation_error("export: observable matrix must be 2 x 2");
    }
    spec.observable.resize(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        spec.observable(i, j) = json_entry(rows[static_cast<std::size_t>(i)]
                                               [static_cast<std::size_t>(j)]);
      }
    }
    if (block) {
      spec.block = *block;
    } else if (doc.contains("block")) {
      if (!doc["block"].is_number_integer()) {
        throw validation_error("export: observable file field 'block' must be an integer");
      }
      spec.block = doc["block"].get<BlockId>();
    } else {
      spec.block = first_qubit_block(shape);
    }
  }
  const int dim = shape.dim(spec.block);  // throws shape_error on a bad label
  if (dim != 2) {
    std::ostringstream msg;
    msg << "export: block " << spec.block << " has dimension " << dim << ", need 2";
    throw unsupported_error(msg.str());
  }
  return spec;
}

void write_export_csv(const RunConfig& config, const ExportSpec& spec, std::ostream& out) {
  if (spec.grid < 2) {
    throw validation_error("export: grid must be at least 2 points per angle");
  }
  if (spec.observable.rows() != 2 || spec.observable.cols() != 2) {
    throw validation_error("export: observable must be 2 x 2");
  }
  const ModuleShape mshape = config.module_shape();
  if (mshape.algebra.dim(spec.block) != 2) {
    throw unsupported_error("export: designated block is not two-dimensional");
  }
  const ModuleElement xi = random_module_element(mshape, config.seed);
  out << "theta,phi,re_f,im_f,section_norm\n";
  char line[192];
  for (int i = 0; i < spec.grid; ++i) {
    const double theta = std::numbers::pi * i / (spec.grid - 1);
    for (int j = 0; j < spec.grid; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / spec.grid;
      Vector x(2);
      x << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
      const Complex f = x.dot(spec.observable * x);
      const double norm = (xi.block(spec.block) * x).norm();
      std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%.12g\n", theta, phi, f.real(),
                    f.imag(), norm);
      out << line;
    }
  }
  if (!out) throw error("export: write failed");
}

}  // namespace ncg
