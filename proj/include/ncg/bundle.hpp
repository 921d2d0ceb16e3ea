// The vector bundle a module spreads out over the pure states.
//
// Over a state rho in block k the fiber is C^{d_k}: a module element xi
// lands there as xi_k x, where x is the state's canonical unit lift.  Fiber
// values are always stored against that canonical lift; choosing a chart
// base h instead multiplies the value by the transition scalar phi_h(x),
// which is what `trivialize` computes.  Constant sections (one per module
// element) are the bundle picture of the module itself.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "ncg/gelfand.hpp"
#include "ncg/module.hpp"

namespace ncg {

struct FiberVector {
  PureState at;
  Vector value;  // d_k components, relative to at.vector()
};

// xi_k x at rho.
FiberVector project(const ModuleElement& xi, const PureState& rho);

class Section {
 public:
  using Evaluator = std::function<FiberVector(const PureState&)>;

  // The constant section of xi: rho -> project(xi, rho).
  static Section constant(ModuleElement xi);

  // Arbitrary pure evaluator; results are shape-checked on evaluation.
  static Section generic(ModuleShape shape, Evaluator f);

  FiberVector operator()(const PureState& rho) const;

  bool is_constant() const { return xi_ != nullptr; }
  const ModuleElement& element() const;  // throws unsupported_error when generic
  const ModuleShape& shape() const { return shape_; }

 private:
  Section(ModuleShape shape, Evaluator f) : shape_(std::move(shape)), eval_(std::move(f)) {}

  ModuleShape shape_;
  Evaluator eval_;
  std::shared_ptr<const ModuleElement> xi_;
};

// Pointwise scaling of a section by a scalar function.
Section operator*(const Section& s, const StateFunction& l);

// <v|w> in the fiber at a common state; conjugate-linear in v.  Equals
// rho(<xi|eta>) when v, w come from projecting module elements.
Complex fiber_inner(const FiberVector& v, const FiberVector& w);

// Fiber pairing of two sections at rho, and the same as a function.
Complex hermitian(const Section& s, const Section& t, const PureState& rho);
StateFunction h_function(const Section& s, const Section& t);

// sup_rho ||s(rho)|| over n draws.  For constant sections with augment=true
// the draw set additionally contains the top right-singular-vector state of
// every block, making the estimate exactly the module norm up to rounding.
double section_norm(const Section& s, StateSampler& sampler, int n_samples,
                    bool augment = true);

// Fiber value of s at rho expressed in the chart-h frame:
// phi_h(x) * s(rho), equivalently the value against the lift Omega_rho^h.
Vector trivialize(const Section& s, const Chart& chart, const PureState& rho);

// The unitary group of the algebra acts on everything in sight:
// states x -> u_k x, module elements xi -> xi u*, fiber vectors by carrying
// the value to the moved state.  All three commute with project and
// preserve fiber_inner.  Throws validation_error when u is not unitary.
PureState group_act(const AlgebraElement& u, const PureState& rho);
ModuleElement group_act(const AlgebraElement& u, const ModuleElement& xi);
FiberVector group_act(const AlgebraElement& u, const FiberVector& v);

// xi_k z for a unit z in block k; invariant under the simultaneous action
// (xi, z) -> (xi u*, u_k z).
Vector typical_fiber_map(const ModuleElement& xi, BlockId block, const Vector& z);

// Largest antiholomorphic derivative norm of the trivialized section over a
// tangent basis at the chart centered on rho; near zero for sections that
// are holomorphic there (constant sections in particular).
double holomorphy_check(const Section& s, const PureState& rho, double step = 1e-4);

// Rank of the evaluation map xi_k -> xi_k x on block k, measured by
// singular-value thresholding of the materialized matrix.  This is the
// dimension of the fiber at rho cut out as a quotient of the module, and
// must equal d_k whenever x != 0.
int fiber_dimension_oracle(const ModuleShape& shape, const PureState& rho);

}  // namespace ncg
