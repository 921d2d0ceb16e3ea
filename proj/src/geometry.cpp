#include "ncg/geometry.hpp"

#include <cmath>
#include <limits>

namespace ncg {

namespace {

constexpr double kChartGuard = 1e-12;   // |<h|x>| below this is "outside the chart"
constexpr double kOrthoTol = 1e-10;     // tangent/coordinate orthogonality tolerance

double weight(const Vector& z) { return 1.0 / (1.0 + z.squaredNorm()); }

void require_block(const Chart& chart, const PureState& rho) {
  if (chart.block != rho.block() || chart.dim() != rho.dim()) {
    throw shape_error("chart/state block mismatch");
  }
}

void require_tangent(const Chart& chart, const Vector& v, const char* what) {
  if (v.size() != chart.base.size()) {
    throw chart_error(std::string(what) + ": dimension does not match the chart");
  }
  if (std::abs(chart.base.dot(v)) > kOrthoTol) {
    throw chart_error(std::string(what) + ": not orthogonal to the chart base point");
  }
}

}  // namespace

Complex canonical_phase(const Vector& v) {
  int best = 0;
  double mag = -1.0;
  for (int i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > mag) {
      mag = m;
      best = i;
    }
  }
  if (mag <= 0) throw validation_error("canonical phase of the zero vector");
  return std::conj(v(best)) / mag;
}

PureState::PureState(BlockId block, const Vector& v) : block_(block) {
  if (block < 1) throw shape_error("pure state: block labels start at 1");
  const double norm = v.norm();
  if (v.size() == 0 || norm <= 0) {
    throw validation_error("pure state: vector must be nonzero");
  }
  vec_ = v / norm;
  vec_ *= canonical_phase(vec_);
}

double state_distance(const PureState& a, const PureState& b) {
  if (a.block() != b.block() || a.dim() != b.dim()) {
    return std::numeric_limits<double>::infinity();
  }
  const Complex inner = b.vector().dot(a.vector());  // <y|x>
  const double mag = std::abs(inner);
  const Complex c = mag > 0 ? inner / mag : Complex(1.0);
  return (a.vector() - c * b.vector()).norm();
}

Complex evaluate(const PureState& rho, const AlgebraElement& a) {
  const int n = a.shape().dim(rho.block());
  if (n != rho.dim()) throw shape_error("evaluate: state/block dimension mismatch");
  const Matrix& m = a.block(rho.block());
  return rho.vector().dot(m * rho.vector());
}

Chart::Chart(BlockId block_label, const Vector& base_point) : block(block_label) {
  if (block < 1) throw shape_error("chart: block labels start at 1");
  const double norm = base_point.norm();
  if (base_point.size() == 0 || norm <= 0) {
    throw validation_error("chart: base point must be nonzero");
  }
  base = base_point / norm;
}

ChartVector::ChartVector(Chart c, Vector v) : chart(std::move(c)), value(std::move(v)) {
  require_tangent(chart, value, "chart vector");
}

ChartVector beta(const Chart& chart, const PureState& rho) {
  require_block(chart, rho);
  const Complex alpha = chart.base.dot(rho.vector());
  if (std::abs(alpha) <= kChartGuard) {
    throw chart_error("beta: state lies outside the chart domain");
  }
  Vector z = rho.vector() / alpha - chart.base;
  z -= chart.base * chart.base.dot(z);  // exact re-projection onto H_h
  return ChartVector(chart, std::move(z));
}

PureState beta_inv(const Chart& chart, const Vector& z) {
  require_tangent(chart, z, "beta_inv coordinate");
  return PureState(chart.block, chart.base + z);
}

Vector omega_vector(const Chart& chart, const PureState& rho) {
  require_block(chart, rho);
  const Complex alpha = chart.base.dot(rho.vector());
  if (std::abs(alpha) <= kChartGuard) {
    throw chart_error("omega_vector: state lies outside the chart domain");
  }
  return (std::conj(alpha) / std::abs(alpha)) * rho.vector();
}

Complex transition_phase(const Chart& chart, const Vector& unit_lift) {
  if (unit_lift.size() != chart.base.size()) {
    throw shape_error("transition_phase: dimension mismatch");
  }
  if (std::abs(unit_lift.norm() - 1.0) > 1e-8) {
    throw validation_error("transition_phase: lift is not a unit vector");
  }
  const Complex alpha = chart.base.dot(unit_lift);  // <h|z>
  if (std::abs(alpha) <= kChartGuard) {
    throw chart_error("transition_phase: lift orthogonal to the chart base point");
  }
  return std::conj(alpha) / std::abs(alpha);
}

Complex kahler_metric(const Chart& chart, const Vector& z, const Vector& u, const Vector& v) {
  require_tangent(chart, z, "metric coordinate");
  require_tangent(chart, u, "metric argument u");
  require_tangent(chart, v, "metric argument v");
  const double w = weight(z);
  return w * v.dot(u) - w * w * v.dot(z) * z.dot(u);
}

Complex kahler_form(const Chart& chart, const Vector& z, const Vector& u, const Vector& v) {
  return -kI * kahler_metric(chart, z, u, v);
}

Complex wirtinger_derivative(const std::function<Complex(const PureState&)>& fn,
                             const Chart& chart, const Vector& z, const Vector& y,
                             Wirtinger kind, double step) {
  require_tangent(chart, z, "wirtinger coordinate");
  require_tangent(chart, y, "wirtinger direction");
  auto f = [&](const Vector& at) { return fn(beta_inv(chart, at)); };
  return detail::wirtinger_stencil(f, z, y, kind == Wirtinger::antiholomorphic, step);
}

std::vector<Vector> tangent_basis(const Chart& chart) {
  const int n = chart.dim();
  std::vector<Vector> basis;
  basis.reserve(static_cast<std::size_t>(n - 1));
  Matrix column(n, 1);
  column.col(0) = chart.base;
  Eigen::HouseholderQR<Matrix> qr(column);
  const Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  for (int j = 1; j < n; ++j) {
    Vector v = q.col(j);
    v -= chart.base * chart.base.dot(v);  // tighten orthogonality to rounding
    basis.push_back(v / v.norm());
  }
  return basis;
}

}  // namespace ncg
