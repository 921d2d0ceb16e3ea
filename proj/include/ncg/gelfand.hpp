// Functions on the pure-state manifold and the product that turns the
// algebra's image among them back into the algebra.
//
// Every element A defines the function f_A(rho) = rho(A).  In a chart with
// base h this reads (f_A . beta_inv)(z) = w <z+h|A(z+h)>, w = 1/(1+|z|^2).
// The product of two functions is
//
//     (l * m)(rho) = l(rho) m(rho) + i (X_m l)(rho),
//
// where X_m is the Hamiltonian field of m for the Fubini-Study form and
// X_m l its holomorphic directional derivative, both taken in the chart
// centered at rho (base = the state's canonical lift, coordinate z = 0).
// On Gelfand functions this realizes f_A * f_B = f_{AB} pointwise; the
// product of generic functions is evaluated with finite differences.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/geometry.hpp"
#include "ncg/sampler.hpp"

namespace ncg {

class StateFunction {
 public:
  using Evaluator = std::function<Complex(const PureState&)>;

  // f_A: carries the element, enabling analytic derivative paths.
  static StateFunction gelfand(AlgebraElement a);

  // Arbitrary evaluator; all derivative paths fall back to finite
  // differences.  The evaluator must be pure (no observable state).
  static StateFunction generic(Evaluator f);

  Complex operator()(const PureState& rho) const { return eval_(rho); }

  bool is_gelfand() const { return observable_ != nullptr; }
  const AlgebraElement& observable() const;  // throws unsupported_error when generic

  // Pointwise complex conjugate; the Gelfand tag follows the involution
  // (conj f_A = f_{A*}).
  StateFunction conjugated() const;

  // Same values with the Gelfand tag dropped; forces every downstream
  // computation through the finite-difference route.
  StateFunction as_generic() const;

 private:
  StateFunction() = default;

  std::shared_ptr<const AlgebraElement> observable_;
  Evaluator eval_;
};

// Analytic chart expression w <z+h|A(z+h)> of a Gelfand function.
Complex gelfand_in_chart(const AlgebraElement& a, const Chart& chart, const Vector& z);

// Analytic Wirtinger derivative of the above along y in H_h:
//   holomorphic:      -w^2 <z|y> q + w <z+h|A y>,  q = <z+h|A(z+h)>
//   antiholomorphic:  -w^2 <y|z> q + w <y|A(z+h)>
Complex gelfand_chart_derivative(const AlgebraElement& a, const Chart& chart, const Vector& z,
                                 const Vector& y, Wirtinger kind);

// Hamiltonian field of l at chart coordinate z, i.e. the unique X in H_h
// with omega_z(X, v-bar) = (d-bar l)(v-bar) for all v in H_h.  Gelfand
// input uses the closed form -i { A(z+h) - <h|A(z+h)>(z+h) }; generic input
// solves the (n-1)x(n-1) metric system with finite-difference right-hand
// sides.  Throws error when the linear solve fails to converge.
ChartVector hamiltonian_field(const StateFunction& l, const Chart& chart, const Vector& z,
                              double step = 1e-4);

// The product described in the header comment.  The result is generic; its
// evaluator re-centers a chart on every evaluation point.
StateFunction star(const StateFunction& l, const StateFunction& m, double step = 1e-4);

// sup_rho |(conj(l) * l)(rho)|^{1/2} estimated over `n_samples` draws.  For
// Gelfand input with augment=true the draw set additionally contains the
// top eigenvector state of (A*A)_k for every block, which turns the
// estimate into the exact operator norm up to rounding.
double star_norm(const StateFunction& l, StateSampler& sampler, int n_samples,
                 bool augment = true, double step = 1e-4);

struct KuReport {
  double max_holomorphic;      // largest |entry| of the pure (1,0)-Hessian
  double max_antiholomorphic;  // largest |entry| of the pure (0,1)-Hessian
  bool member;

  double residual() const { return std::max(max_holomorphic, max_antiholomorphic); }
};

// Checks the second-order condition that cuts the algebra's image out of
// the smooth functions: both pure Hessians of l vanish at the chart center
// of rho.  Nested central differences with half-width `step`.
KuReport ku_membership_check(const StateFunction& l, const PureState& rho, double tol = 1e-4,
                             double step = 1e-4);

struct Reconstruction {
  AlgebraElement element;
  double residual;  // max |rho_i(element) - value_i| over the samples
};

// Recovers A from samples (rho_i, f_A(rho_i)).  Per block, real-linear
// least squares in a Hermitian matrix basis: real parts determine the
// Hermitian part of A, imaginary parts the anti-Hermitian part.  Throws
// underdetermined_error naming the first block whose sample set does not
// span the Hermitian forms (rank < n_k^2).
Reconstruction reconstruct(const std::vector<std::pair<PureState, Complex>>& samples,
                           const AlgebraShape& shape);

// Top-eigenvector state per block of a Hermitian element.
std::vector<PureState> top_eigenstates(const AlgebraElement& hermitian);

}  // namespace ncg
