#include <cmath>

#include "doctest.h"
#include "ncg/connection.hpp"

using namespace ncg;

namespace {

const AlgebraShape kQubit({2});
const AlgebraShape kQutrit({3});

Vector e(int n, int i) { return Vector::Unit(n, i); }

ModuleElement identity_module() {
  ModuleElement xi(ModuleShape(kQubit, {2}));
  xi.block(1) = Matrix::Identity(2, 2);
  return xi;
}

}  // namespace

TEST_CASE("connection coefficient") {
  const Chart chart(1, e(3, 0));
  // z = Y = e2: -(1/2) * 1 / (1 + 1) = -1/4.
  CHECK(std::abs(connection_coeff(chart, e(3, 1), e(3, 1)) - Complex(-0.25)) <= 1e-15);
  CHECK(std::abs(connection_coeff(chart, Vector::Zero(3), e(3, 1))) == 0.0);
  CHECK(std::abs(connection_coeff(chart, e(3, 1), e(3, 2))) == 0.0);
  CHECK_THROWS_AS(connection_coeff(chart, e(3, 0), e(3, 1)), chart_error);
}

TEST_CASE("identical charts have a vanishing cocycle") {
  const Chart chart(1, (e(3, 0) + e(3, 1)).normalized());
  const PureState rho(1, e(3, 0) + 2.0 * e(3, 1) + e(3, 2));
  const Vector y = (e(3, 0) - e(3, 1)).normalized();
  CHECK(cocycle_check(chart, chart, rho, y) <= 1e-13);
}

TEST_CASE("cocycle at the second chart's center") {
  const Chart h(1, (e(3, 0) + e(3, 1)).normalized());
  const Chart h_prime(1, e(3, 0));
  const PureState rho(1, e(3, 0));
  CHECK(cocycle_check(h, h_prime, rho, e(3, 1)) <= 1e-8);
}

TEST_CASE("cocycle holds at a generic point") {
  const Chart h(1, (e(3, 0) + e(3, 1)).normalized());
  const Chart h_prime(1, e(3, 0));
  const PureState rho(1, 2.0 * e(3, 0) + e(3, 1) + e(3, 2));
  const Vector y = (e(3, 1) - e(3, 2)).normalized();
  CHECK(cocycle_check(h, h_prime, rho, y) <= 1e-6);
}

TEST_CASE("orthogonal charts have no overlap") {
  const Chart h(1, e(3, 0));
  const Chart h_prime(1, e(3, 1));
  const PureState rho(1, e(3, 0) + e(3, 1));
  CHECK_THROWS_AS(cocycle_check(h, h_prime, rho, e(3, 0)), chart_error);
}

TEST_CASE("transport solver hits the prescribed value") {
  const Chart chart(1, e(3, 0));
  SUBCASE("center") {
    const AlgebraElement k = transport_solver(kQutrit, chart, Vector::Zero(3), e(3, 1));
    CHECK((k.block(1) * e(3, 0) - e(3, 1)).norm() <= 1e-15);
  }
  SUBCASE("off center") {
    const Vector z = 0.5 * e(3, 1) + 0.25 * kI * e(3, 2);
    const Vector y = (e(3, 1) + e(3, 2)).normalized();
    const AlgebraElement k = transport_solver(kQutrit, chart, z, y);
    CHECK((k.block(1) * (z + chart.base) - y).norm() <= 1e-14);
  }
  SUBCASE("zero direction") {
    const AlgebraElement k = transport_solver(kQutrit, chart, Vector::Zero(3), Vector::Zero(3));
    CHECK(k.operator_norm() == 0.0);
  }
}

TEST_CASE("covariant derivative of a constant section") {
  const Section s = Section::constant(identity_module());
  const PureState rho(1, e(2, 0));
  const Vector y = e(2, 1);
  const FiberVector analytic = covariant_derivative(s, rho, y, DerivMode::analytic);
  CHECK((analytic.value - e(2, 1)).norm() == 0.0);
  const FiberVector fd = covariant_derivative(s, rho, y, DerivMode::finite_difference);
  CHECK((fd.value - analytic.value).norm() <= 1e-6);
  const FiberVector at_zero =
      covariant_derivative(s, rho, Vector::Zero(2), DerivMode::analytic);
  CHECK(at_zero.value.norm() == 0.0);
  CHECK_THROWS_AS(covariant_derivative(s, rho, e(2, 0), DerivMode::analytic), chart_error);

  const Section g = Section::generic(s.shape(), [&s](const PureState& p) { return s(p); });
  CHECK_THROWS_AS(covariant_derivative(g, rho, y, DerivMode::analytic), unsupported_error);
}

TEST_CASE("star action against the module action") {
  const ModuleElement xi = identity_module();
  const Section s = Section::constant(xi);
  const PureState rho(1, e(2, 0));
  AlgebraElement sz(kQubit);
  sz.block(1) << 1, 0, 0, -1;
  const StateFunction f = StateFunction::gelfand(sz);
  // At the fixed point [e1] the field vanishes and s*f = project(xi sz, .).
  const FiberVector acted = star_action(s, f, rho);
  CHECK((acted.value - e(2, 0)).norm() <= 1e-14);
  // The algebra unit acts trivially.
  const StateFunction one = StateFunction::gelfand(AlgebraElement::unit(kQubit));
  const PureState rho2(1, e(2, 0) + kI * e(2, 1));
  CHECK((star_action(s, one, rho2).value - s(rho2).value).norm() <= 1e-14);
  // Finite differences agree with the analytic route.
  AlgebraElement sx(kQubit);
  sx.block(1) << 0, 1, 1, 0;
  const StateFunction fx = StateFunction::gelfand(sx);
  const FiberVector fd = star_action(s, fx, rho2, DerivMode::finite_difference);
  const FiberVector an = star_action(s, fx, rho2, DerivMode::analytic);
  CHECK((fd.value - an.value).norm() <= 1e-5);
}

TEST_CASE("curvature vanishes in holomorphic directions") {
  ModuleElement xi(ModuleShape(kQutrit, {2}));
  xi.block(1) << 1, 2, 0, 0, 1, -1;
  const Section s = Section::constant(xi);
  const PureState rho(1, e(3, 0) + e(3, 1) + e(3, 2));
  const Chart chart(1, rho.vector());
  const auto basis = tangent_basis(chart);
  CHECK(flatness_check(s, rho, basis[0], basis[1]) <= 1e-4);
  CHECK(flatness_check(s, rho, basis[0], basis[0]) == 0.0);
}
