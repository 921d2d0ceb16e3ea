#include "doctest.h"
#include "ncg/module.hpp"

using namespace ncg;

namespace {

const AlgebraShape kQubit({2});

ModuleElement from_matrix(const Matrix& m) {
  ModuleElement xi(ModuleShape(kQubit, {static_cast<int>(m.rows())}));
  xi.block(1) = m;
  return xi;
}

}  // namespace

TEST_CASE("module shape validation") {
  CHECK_THROWS_AS(ModuleShape(AlgebraShape({2, 3}), {1}), shape_error);
  CHECK_THROWS_AS(ModuleShape(kQubit, {-1}), shape_error);
  const ModuleShape shape(AlgebraShape({2, 3}), {3, 0});
  CHECK(shape.rows_of(1) == 3);
  CHECK(shape.rows_of(2) == 0);
  CHECK_THROWS_AS(shape.rows_of(3), shape_error);
}

TEST_CASE("pairing is the blockwise adjoint product") {
  Matrix m(1, 2);
  m << 1, 0;
  const ModuleElement xi = from_matrix(m);
  const AlgebraElement gram = inner(xi, xi);
  CHECK(std::abs(gram.block(1)(0, 0) - 1.0) == 0.0);
  CHECK(std::abs(gram.block(1)(1, 1)) == 0.0);
  CHECK(std::abs(gram.block(1)(0, 1)) == 0.0);
}

TEST_CASE("pairing is conjugate-linear in the first slot") {
  const ModuleShape shape(kQubit, {2});
  const ModuleElement xi = random_module_element(shape, 3);
  const ModuleElement eta = random_module_element(shape, 4);
  const Complex c(0.5, -2.0);
  CHECK(distance(inner(c * xi, eta), std::conj(c) * inner(xi, eta)) <= 1e-14);
  CHECK(distance(inner(xi, c * eta), c * inner(xi, eta)) <= 1e-14);
}

TEST_CASE("right action is the blockwise product") {
  Matrix id2 = Matrix::Identity(2, 2);
  AlgebraElement sx(kQubit);
  sx.block(1) << 0, 1, 1, 0;
  const ModuleElement moved = act(from_matrix(id2), sx);
  CHECK((moved.block(1) - sx.block(1)).norm() == 0.0);
}

TEST_CASE("module norm is the largest singular value over blocks") {
  Matrix m(2, 2);
  m << 0, 2, 0, 0;
  CHECK(module_norm(from_matrix(m)) == doctest::Approx(2.0));
  // Zero-row summands contribute nothing.
  ModuleElement xi(ModuleShape(AlgebraShape({2, 3}), {0, 1}));
  xi.block(2) << 3, 0, 0;
  CHECK(module_norm(xi) == doctest::Approx(3.0));
  CHECK(xi.block(1).rows() == 0);
  const AlgebraElement gram = inner(xi, xi);
  CHECK(gram.block(1).norm() == 0.0);
}

TEST_CASE("random module elements are deterministic") {
  const ModuleShape shape(AlgebraShape({2, 3}), {3, 1});
  const ModuleElement a = random_module_element(shape, 9);
  const ModuleElement b = random_module_element(shape, 9);
  CHECK(module_norm(a - b) == 0.0);
}

TEST_CASE("mismatched module shapes refuse arithmetic") {
  ModuleElement a(ModuleShape(kQubit, {1}));
  ModuleElement b(ModuleShape(kQubit, {2}));
  CHECK_THROWS_AS(a + b, shape_error);
  CHECK_THROWS_AS(inner(a, b), shape_error);
}
