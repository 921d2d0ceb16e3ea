// Shared scalar/matrix aliases and the error taxonomy used across the library.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ncg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Block labels are 1-based: a shape with K blocks has labels 1..K.
using BlockId = int;

inline constexpr Complex kI{0.0, 1.0};

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed shapes or operands whose shapes disagree.
struct shape_error : error {
  using error::error;
};

// Chart-domain violations: state orthogonal to the base point, or a
// coordinate/tangent vector that is not orthogonal to the base point.
struct chart_error : error {
  using error::error;
};

// Bad argument values: non-unitary group element, invalid config field, ...
struct validation_error : error {
  using error::error;
};

// Requested an analytic path that only exists for a restricted input class.
struct unsupported_error : error {
  using error::error;
};

// Linear reconstruction lacked rank; carries the offending block label.
struct underdetermined_error : error {
  BlockId block;
  underdetermined_error(BlockId b, const std::string& what) : error(what), block(b) {}
};

}  // namespace ncg
