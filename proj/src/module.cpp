#include "ncg/module.hpp"

#include "ncg/random.hpp"

namespace ncg {

ModuleShape::ModuleShape(AlgebraShape algebra_shape, std::vector<int> row_counts)
    : algebra(std::move(algebra_shape)), rows(std::move(row_counts)) {
  if (static_cast<int>(rows.size()) != algebra.num_blocks()) {
    throw shape_error("module shape: row list length must equal the block count");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) {
      throw shape_error("module shape: block " + std::to_string(i + 1) +
                        " has negative row count");
    }
  }
}

int ModuleShape::rows_of(BlockId k) const {
  algebra.dim(k);  // label check
  return rows[static_cast<std::size_t>(k - 1)];
}

ModuleElement::ModuleElement(ModuleShape shape) : shape_(std::move(shape)) {
  data_.reserve(shape_.rows.size());
  for (BlockId k : spectrum(shape_.algebra)) {
    data_.push_back(Matrix::Zero(shape_.rows_of(k), shape_.algebra.dim(k)));
  }
}

const Matrix& ModuleElement::block(BlockId k) const {
  shape_.algebra.dim(k);
  return data_[static_cast<std::size_t>(k - 1)];
}

Matrix& ModuleElement::block(BlockId k) {
  shape_.algebra.dim(k);
  return data_[static_cast<std::size_t>(k - 1)];
}

namespace {

void require_same_shape(const ModuleElement& a, const ModuleElement& b) {
  if (!(a.shape() == b.shape())) throw shape_error("module arithmetic: operand shapes differ");
}

}  // namespace

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs) {
  require_same_shape(*this, rhs);
  for (BlockId k : spectrum(shape_.algebra)) block(k) += rhs.block(k);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs) {
  require_same_shape(*this, rhs);
  for (BlockId k : spectrum(shape_.algebra)) block(k) -= rhs.block(k);
  return *this;
}

ModuleElement& ModuleElement::operator*=(Complex c) {
  for (Matrix& m : data_) m *= c;
  return *this;
}

AlgebraElement inner(const ModuleElement& xi, const ModuleElement& eta) {
  require_same_shape(xi, eta);
  AlgebraElement out(xi.shape().algebra);
  for (BlockId k : spectrum(xi.shape().algebra)) {
    out.block(k) = xi.block(k).adjoint() * eta.block(k);
  }
  return out;
}

ModuleElement act(const ModuleElement& xi, const AlgebraElement& a) {
  if (!(xi.shape().algebra == a.shape())) {
    throw shape_error("act: module and algebra shapes differ");
  }
  ModuleElement out(xi.shape());
  for (BlockId k : spectrum(a.shape())) out.block(k) = xi.block(k) * a.block(k);
  return out;
}

double module_norm(const ModuleElement& xi) {
  double norm = 0.0;
  for (BlockId k : spectrum(xi.shape().algebra)) {
    const Matrix& m = xi.block(k);
    if (m.rows() == 0) continue;
    norm = std::max(norm, m.jacobiSvd().singularValues().coeff(0));
  }
  return norm;
}

ModuleElement random_module_element(const ModuleShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  ModuleElement out(shape);
  for (BlockId k : spectrum(shape.algebra)) {
    Matrix& m = out.block(k);
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rng.complex_normal();
  }
  return out;
}

}  // namespace ncg
