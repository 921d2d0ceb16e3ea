// Pure states of a block matrix algebra and the local geometry of their
// projective manifolds.
//
// A pure state is a ray [x] in one block's C^{n_k}; it is stored as the unit
// representative whose largest-magnitude component is real and positive, so
// equal rays compare equal componentwise.  Around any unit base point h the
// ray space carries the affine chart
//
//     beta_h([x]) = x / <h|x> - h          (defined when <h|x> != 0),
//
// whose image is the orthogonal complement H_h = { z : <h|z> = 0 }.  All
// inner products are conjugate-linear in the FIRST slot.  On chart
// coordinates the Fubini-Study metric and form are, with w = 1/(1+|z|^2),
//
//     g_z(v-bar, u) = w <v|u> - w^2 <v|z><z|u>
//     omega_z(v-bar, u) = i { -w <v|u> + w^2 <v|z><z|u> },
//
// so omega = -i g on (antiholomorphic, holomorphic) argument pairs.
#pragma once

#include <functional>
#include <type_traits>
#include <vector>

#include "ncg/algebra.hpp"
#include "ncg/common.hpp"

namespace ncg {

// Phase factor c with |c| = 1 such that the largest-magnitude component of
// c*v is real and positive.  Ties pick the earliest component.
Complex canonical_phase(const Vector& v);

class PureState {
 public:
  // Normalizes v and applies the canonical phase; the block label must be
  // matched against an algebra shape at evaluation time.
  PureState(BlockId block, const Vector& v);

  BlockId block() const { return block_; }
  const Vector& vector() const { return vec_; }
  int dim() const { return static_cast<int>(vec_.size()); }

 private:
  BlockId block_;
  Vector vec_;
};

// Phase-insensitive distance min_{|c|=1} ||x - c y||; infinity for states
// in different blocks.  Free of cancellation near zero, so it resolves
// distances well below 1e-12.
double state_distance(const PureState& a, const PureState& b);

inline bool approx_equal(const PureState& a, const PureState& b, double tol = 1e-10) {
  return state_distance(a, b) <= tol;
}

// rho(A) = <x|A_k x>.  Throws shape_error when the state's block does not
// exist in A's shape or the dimensions disagree.
Complex evaluate(const PureState& rho, const AlgebraElement& a);

// Block label of the irreducible representation the state lives in.
inline BlockId base_point(const PureState& rho) { return rho.block(); }

struct Chart {
  // Keeps the base point's phase (different phases are different charts);
  // only the norm is fixed to 1.  Throws validation_error on a zero vector.
  Chart(BlockId block, const Vector& base_point);

  BlockId block;
  Vector base;

  int dim() const { return static_cast<int>(base.size()); }
};

// A chart coordinate or tangent vector: an element of H_h.
struct ChartVector {
  // Throws chart_error unless <h|value> vanishes to 1e-10.
  ChartVector(Chart chart, Vector value);

  Chart chart;
  Vector value;
};

// Chart coordinate of a state; throws chart_error when |<h|x>| <= 1e-12.
ChartVector beta(const Chart& chart, const PureState& rho);

// Inverse chart map, [z + h] normalized.
PureState beta_inv(const Chart& chart, const Vector& z);
inline PureState beta_inv(const ChartVector& z) { return beta_inv(z.chart, z.value); }

// The unit lift of rho with <h|Omega> real and positive; equals
// (z + h) / sqrt(1 + |z|^2) for z = beta_h(rho).
Vector omega_vector(const Chart& chart, const PureState& rho);

// phi_h(z) = <z|h> / |<h|z>| for a unit lift z; the fiberwise transition
// scalar of the tautological circle bundle.
Complex transition_phase(const Chart& chart, const Vector& unit_lift);

// Fubini-Study metric/form on chart coordinates.  The LAST argument is the
// conjugated slot: kahler_metric(c, z, u, v) = g_z(v-bar, u).
Complex kahler_metric(const Chart& chart, const Vector& z, const Vector& u, const Vector& v);
Complex kahler_form(const Chart& chart, const Vector& z, const Vector& u, const Vector& v);

enum class Wirtinger { holomorphic, antiholomorphic };

// Central-difference Wirtinger derivative at chart coordinate z along
// Y in H_h of the scalar function fn pulled back through beta_inv:
//
//   holomorphic:      1/2 [ d/dt f(z+tY) - i d/dt f(z+itY) ]
//   antiholomorphic:  1/2 [ d/dt f(z+tY) + i d/dt f(z+itY) ]
//
// with each d/dt a second-order central difference of half-width `step`.
Complex wirtinger_derivative(const std::function<Complex(const PureState&)>& fn,
                             const Chart& chart, const Vector& z, const Vector& y,
                             Wirtinger kind, double step = 1e-4);

// Deterministic orthonormal basis of H_h (n-1 vectors).
std::vector<Vector> tangent_basis(const Chart& chart);

namespace detail {

// Shared stencil core; F maps a chart coordinate (Vector) to Complex or to
// an Eigen vector.  Evaluation failures inside the stencil propagate.
template <class F>
auto wirtinger_stencil(F&& f, const Vector& z, const Vector& y, bool antiholomorphic,
                       double step) {
  if (step <= 0) throw validation_error("wirtinger derivative: step must be positive");
  using T = std::decay_t<decltype(f(z))>;
  const Vector yi = kI * y;
  const double scale = 0.5 / step;
  T d_re = f(z + step * y);
  d_re -= f(z - step * y);
  d_re *= scale;
  T d_im = f(z + step * yi);
  d_im -= f(z - step * yi);
  d_im *= scale;
  T out = d_re;
  if (antiholomorphic) {
    out += kI * d_im;
  } else {
    out -= kI * d_im;
  }
  out *= 0.5;
  return out;
}

}  // namespace detail

}  // namespace ncg
