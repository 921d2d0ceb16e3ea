// Finitely generated right modules over a block matrix algebra.
//
// A module element is a tuple of rectangular blocks xi_k of size d_k x n_k
// (d_k >= 0 is allowed).  The algebra acts on the right, blockwise matrix
// product; the algebra-valued pairing <xi|eta> = xi_k^* eta_k is
// conjugate-linear in the first slot, and the module norm is
// ||<xi|xi>||^{1/2}, i.e. the largest singular value over all blocks.
#pragma once

#include <cstdint>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/common.hpp"

namespace ncg {

struct ModuleShape {
  // rows[k-1] = d_k; must match the algebra's block count, entries >= 0.
  ModuleShape(AlgebraShape algebra_shape, std::vector<int> row_counts);

  AlgebraShape algebra;
  std::vector<int> rows;

  int rows_of(BlockId k) const;

  bool operator==(const ModuleShape&) const = default;
};

class ModuleElement {
 public:
  explicit ModuleElement(ModuleShape shape);  // zero element

  static ModuleElement zero(const ModuleShape& shape) { return ModuleElement(shape); }

  const ModuleShape& shape() const { return shape_; }
  const Matrix& block(BlockId k) const;
  Matrix& block(BlockId k);

  ModuleElement& operator+=(const ModuleElement& rhs);
  ModuleElement& operator-=(const ModuleElement& rhs);
  ModuleElement& operator*=(Complex c);

  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(Complex c, ModuleElement a) { return a *= c; }

 private:
  ModuleShape shape_;
  std::vector<Matrix> data_;
};

// <xi|eta> = xi_k^* eta_k per block.
AlgebraElement inner(const ModuleElement& xi, const ModuleElement& eta);

// xi . A = xi_k A_k per block.
ModuleElement act(const ModuleElement& xi, const AlgebraElement& a);

// operator_norm(inner(xi, xi))^{1/2} computed directly from the blocks.
double module_norm(const ModuleElement& xi);

// Gaussian entries, deterministic in the seed.
ModuleElement random_module_element(const ModuleShape& shape, std::uint64_t seed);

}  // namespace ncg
