#include "ncg/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "ncg/random.hpp"

namespace ncg {

AlgebraShape::AlgebraShape(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw shape_error("algebra shape: block list is empty");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i] < 1) {
      throw shape_error("algebra shape: block " + std::to_string(i + 1) +
                        " has nonpositive dimension " + std::to_string(blocks_[i]));
    }
  }
}

int AlgebraShape::dim(BlockId k) const {
  if (k < 1 || k > num_blocks()) {
    throw shape_error("algebra shape: no block labelled " + std::to_string(k));
  }
  return blocks_[static_cast<std::size_t>(k - 1)];
}

int AlgebraShape::total_dim() const {
  return std::accumulate(blocks_.begin(), blocks_.end(), 0,
                         [](int acc, int n) { return acc + n * n; });
}

std::vector<BlockId> spectrum(const AlgebraShape& shape) {
  std::vector<BlockId> labels(static_cast<std::size_t>(shape.num_blocks()));
  std::iota(labels.begin(), labels.end(), 1);
  return labels;
}

std::vector<int> iso_signature(const AlgebraShape& shape) {
  std::vector<int> sig = shape.blocks();
  std::sort(sig.begin(), sig.end());
  return sig;
}

AlgebraElement::AlgebraElement(AlgebraShape shape) : shape_(std::move(shape)) {
  data_.reserve(static_cast<std::size_t>(shape_.num_blocks()));
  for (int n : shape_.blocks()) data_.push_back(Matrix::Zero(n, n));
}

AlgebraElement AlgebraElement::unit(const AlgebraShape& shape) {
  AlgebraElement e(shape);
  for (BlockId k : spectrum(shape)) e.block(k).setIdentity();
  return e;
}

const Matrix& AlgebraElement::block(BlockId k) const {
  shape_.dim(k);  // label check
  return data_[static_cast<std::size_t>(k - 1)];
}

Matrix& AlgebraElement::block(BlockId k) {
  shape_.dim(k);
  return data_[static_cast<std::size_t>(k - 1)];
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement out(shape_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].adjoint();
  return out;
}

double AlgebraElement::operator_norm() const {
  double norm = 0.0;
  for (const Matrix& m : data_) {
    norm = std::max(norm, m.jacobiSvd().singularValues().coeff(0));
  }
  return norm;
}

double AlgebraElement::hermitian_defect() const { return distance(*this, adjoint()); }

double AlgebraElement::unitary_defect() const {
  return distance(adjoint() * (*this), unit(shape_));
}

namespace {

void require_same_shape(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.shape() == b.shape())) throw shape_error("algebra arithmetic: operand shapes differ");
}

}  // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_shape(*this, rhs);
  for (BlockId k : spectrum(shape_)) block(k) += rhs.block(k);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_shape(*this, rhs);
  for (BlockId k : spectrum(shape_)) block(k) -= rhs.block(k);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Complex c) {
  for (Matrix& m : data_) m *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_shape(a, b);
  AlgebraElement out(a.shape());
  for (BlockId k : spectrum(a.shape())) out.block(k) = a.block(k) * b.block(k);
  return out;
}

AlgebraElement random_hermitian(const AlgebraShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  AlgebraElement out(shape);
  for (BlockId k : spectrum(shape)) {
    const int n = shape.dim(k);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    out.block(k) = 0.5 * (g + g.adjoint());
  }
  return out;
}

AlgebraElement random_unitary(const AlgebraShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  AlgebraElement out(shape);
  for (BlockId k : spectrum(shape)) {
    const int n = shape.dim(k);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    // Fix column phases against the R diagonal so the draw is rotation-free.
    const Vector diag = qr.matrixQR().diagonal();
    for (int j = 0; j < n; ++j) {
      const double mag = std::abs(diag(j));
      if (mag > 0) q.col(j) *= diag(j) / mag;
    }
    out.block(k) = q;
  }
  return out;
}

}  // namespace ncg
