#include "ncg/connection.hpp"

#include <cmath>
#include <string>

namespace ncg {

namespace {

void require_tangent_at(const Chart& chart, const Vector& v, const char* what) {
  if (v.size() != chart.base.size()) {
    throw chart_error(std::string(what) + ": dimension does not match the chart");
  }
  if (std::abs(chart.base.dot(v)) > 1e-10) {
    throw chart_error(std::string(what) + ": not orthogonal to the chart base point");
  }
}

}  // namespace

Complex connection_coeff(const Chart& chart, const Vector& z, const Vector& y) {
  require_tangent_at(chart, z, "connection coefficient coordinate");
  require_tangent_at(chart, y, "connection coefficient direction");
  return -0.5 * z.dot(y) / (1.0 + z.squaredNorm());
}

double cocycle_check(const Chart& chart_h, const Chart& chart_h_prime, const PureState& rho,
                     const Vector& y, double step) {
  if (chart_h.block != chart_h_prime.block || chart_h.dim() != chart_h_prime.dim()) {
    throw shape_error("cocycle_check: charts live over different blocks");
  }
  require_tangent_at(chart_h_prime, y, "cocycle direction");
  if (step <= 0) throw validation_error("cocycle_check: step must be positive");
  const Complex overlap = chart_h.base.dot(chart_h_prime.base);
  if (std::abs(overlap) <= 1e-12) {
    throw chart_error("cocycle_check: chart base points are orthogonal");
  }
  const Vector z_prime = beta(chart_h_prime, rho).value;

  // h-coordinates of the same state, as a function of the h'-coordinate.
  auto transition = [&](const Vector& at) {
    return beta(chart_h, beta_inv(chart_h_prime, at)).value;
  };
  const Vector z_h = transition(z_prime);
  const Vector pushed =
      (transition(z_prime + step * y) - transition(z_prime - step * y)) / (2.0 * step);

  const Complex lhs = connection_coeff(chart_h_prime, z_prime, y);
  const Complex shift =
      -0.5 * chart_h.base.dot(y) / chart_h.base.dot(z_prime + chart_h_prime.base);
  const Complex rhs = shift + connection_coeff(chart_h, z_h, pushed);
  return std::abs(lhs - rhs);
}

AlgebraElement transport_solver(const AlgebraShape& shape, const Chart& chart, const Vector& z,
                                const Vector& y) {
  if (shape.dim(chart.block) != chart.dim()) {
    throw shape_error("transport_solver: chart does not match the algebra shape");
  }
  require_tangent_at(chart, z, "transport coordinate");
  require_tangent_at(chart, y, "transport direction");
  const Vector v = z + chart.base;
  AlgebraElement k(shape);
  k.block(chart.block) = y * v.adjoint() / v.squaredNorm();
  return k;
}

FiberVector covariant_derivative(const Section& s, const PureState& rho, const Vector& y,
                                 DerivMode mode, double step) {
  const Chart chart(rho.block(), rho.vector());
  require_tangent_at(chart, y, "covariant derivative direction");
  if (mode == DerivMode::analytic) {
    if (!s.is_constant()) {
      throw unsupported_error("covariant_derivative: analytic mode needs a constant section");
    }
    return FiberVector{rho, s.element().block(rho.block()) * y};
  }
  const Vector center = Vector::Zero(rho.dim());
  auto f = [&](const Vector& at) { return trivialize(s, chart, beta_inv(chart, at)); };
  Vector d = detail::wirtinger_stencil(f, center, y, /*antiholomorphic=*/false, step);
  // The coefficient vanishes at the chart center, so no A_Y s term appears.
  return FiberVector{rho, std::move(d)};
}

FiberVector star_action(const Section& s, const StateFunction& l, const PureState& rho,
                        DerivMode mode, double step) {
  const Chart chart(rho.block(), rho.vector());
  const Vector center = Vector::Zero(rho.dim());
  const Vector field = hamiltonian_field(l, chart, center, step).value;
  FiberVector out = s(rho);
  out.value *= l(rho);
  out.value += kI * covariant_derivative(s, rho, field, mode, step).value;
  return out;
}

double flatness_check(const Section& s, const PureState& rho, const Vector& y, const Vector& z,
                      double step) {
  const Chart chart(rho.block(), rho.vector());
  require_tangent_at(chart, y, "flatness direction Y");
  require_tangent_at(chart, z, "flatness direction Z");
  const Vector center = Vector::Zero(rho.dim());
  auto f = [&](const Vector& at) { return trivialize(s, chart, beta_inv(chart, at)); };
  // Full covariant derivative along w as a function of the chart point;
  // the coefficient matters at the off-center stencil points.
  auto covariant_along = [&](const Vector& w) {
    return [&, w](const Vector& at) {
      Vector d = detail::wirtinger_stencil(f, at, w, /*antiholomorphic=*/false, step);
      d += connection_coeff(chart, at, w) * f(at);
      return d;
    };
  };
  // Outer coefficients A_Y, A_Z vanish at the center, leaving the plain
  // holomorphic derivatives of the inner covariant derivatives.
  const Vector d_yz =
      detail::wirtinger_stencil(covariant_along(z), center, y, /*antiholomorphic=*/false, step);
  const Vector d_zy =
      detail::wirtinger_stencil(covariant_along(y), center, z, /*antiholomorphic=*/false, step);
  return (d_yz - d_zy).norm();
}

}  // namespace ncg
