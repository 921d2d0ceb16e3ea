// Finite-dimensional block matrix *-algebras.
//
// An algebra is described by a list of block dimensions [n_1, ..., n_K]; an
// element is one complex n_k x n_k matrix per block.  All arithmetic is
// blockwise, the involution is the conjugate transpose, and the norm is the
// largest singular value over all blocks (which makes the C*-identity
// ||A*A|| = ||A||^2 hold to rounding).
#pragma once

#include <cstdint>
#include <vector>

#include "ncg/common.hpp"

namespace ncg {

class AlgebraShape {
 public:
  // Throws shape_error when the list is empty or an entry is < 1.
  explicit AlgebraShape(std::vector<int> blocks);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int dim(BlockId k) const;
  const std::vector<int>& blocks() const { return blocks_; }

  // Total complex dimension, sum of n_k^2.
  int total_dim() const;

  bool operator==(const AlgebraShape&) const = default;

 private:
  std::vector<int> blocks_;
};

// Block labels, in order.  The label set doubles as the discrete base space
// of every bundle built over the algebra's pure states.
std::vector<BlockId> spectrum(const AlgebraShape& shape);

// Sorted block dimensions; two shapes are isomorphic iff these agree.
std::vector<int> iso_signature(const AlgebraShape& shape);

class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraShape shape);  // zero element

  static AlgebraElement zero(const AlgebraShape& shape) { return AlgebraElement(shape); }
  static AlgebraElement unit(const AlgebraShape& shape);

  const AlgebraShape& shape() const { return shape_; }
  const Matrix& block(BlockId k) const;
  Matrix& block(BlockId k);

  AlgebraElement adjoint() const;
  double operator_norm() const;

  double hermitian_defect() const;  // ||A - A*||
  double unitary_defect() const;    // ||A*A - 1||

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(Complex c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(Complex c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(AlgebraElement a, Complex c) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

 private:
  AlgebraShape shape_;
  std::vector<Matrix> data_;
};

inline double distance(const AlgebraElement& a, const AlgebraElement& b) {
  return (a - b).operator_norm();
}

// Gaussian Hermitian element: G has iid standard complex normal entries,
// the block is (G + G*)/2.  Same seed, same element, on every platform.
AlgebraElement random_hermitian(const AlgebraShape& shape, std::uint64_t seed);

// Haar-ish unitary element (QR of a Gaussian matrix with phase fix);
// exact unitarity up to rounding, deterministic in the seed.
AlgebraElement random_unitary(const AlgebraShape& shape, std::uint64_t seed);

}  // namespace ncg
