// The flat connection carried by the bundle's chart trivializations.
//
// In the chart with base h the covariant derivative along a tangent Y is
// d_Y + A_Y with the scalar coefficient
//
//     A_{Y,z} = -1/2 <z|Y> / (1 + |z|^2),
//
// and switching the trivialization from h' to h shifts the coefficient by
// the exact cocycle  -1/2 <h|Y> / <h|z + h'>  (z the h'-coordinate of the
// state, Y realized on H_{h'}).  At a chart center the coefficient
// vanishes, so there the covariant derivative of a constant section is the
// plain derivative of its trivialization, which evaluates to xi_k Y.
#pragma once

#include "ncg/bundle.hpp"

namespace ncg {

enum class DerivMode { analytic, finite_difference };

// A_{Y,z} above.  z and y must lie in H_h.
Complex connection_coeff(const Chart& chart, const Vector& z, const Vector& y);

// |A^{h'} - (cocycle + A^h)| at rho, where Y lives on H_{h'} and is pushed
// to H_h with a central-difference Jacobian of the chart transition.
// Zero for h = h'; requires rho in both chart domains and <h|h'> != 0.
double cocycle_check(const Chart& chart_h, const Chart& chart_h_prime, const PureState& rho,
                     const Vector& y, double step = 1e-4);

// Minimal-norm algebra element K with K (z+h) = Y on the chart's block and
// zero elsewhere: K = Y (z+h)^* / |z+h|^2.  Any such K transports constant
// sections identically; this one is the canonical representative.
AlgebraElement transport_solver(const AlgebraShape& shape, const Chart& chart, const Vector& z,
                                const Vector& y);

// Covariant derivative of s at rho along Y (Y orthogonal to the canonical
// lift).  analytic: requires a constant section, returns xi_k Y.
// finite_difference: holomorphic stencil of the trivialized section in the
// chart centered at rho.
FiberVector covariant_derivative(const Section& s, const PureState& rho, const Vector& y,
                                 DerivMode mode, double step = 1e-4);

// The module-side star action  (s * l)(rho) = s(rho) l(rho) + i D_{X_l} s,
// with X_l the Hamiltonian field of l at rho.  With a constant section and
// a Gelfand function this reproduces the algebra action:
// constant(xi) * f_A = project(xi A, .) pointwise.
FiberVector star_action(const Section& s, const StateFunction& l, const PureState& rho,
                        DerivMode mode = DerivMode::analytic, double step = 1e-4);

// || D_Y D_Z s - D_Z D_Y s || at the chart center of rho for constant
// coordinate fields Y, Z, evaluated by nesting finite differences of the
// full covariant derivative (coefficient included at every stencil point).
// Near zero in holomorphic direction pairs: the coefficient's holomorphic
// derivative is symmetric in (Y, Z).
double flatness_check(const Section& s, const PureState& rho, const Vector& y, const Vector& z,
                      double step = 1e-4);

}  // namespace ncg
