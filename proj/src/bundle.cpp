#include "ncg/bundle.hpp"

#include <cmath>

namespace ncg {

FiberVector project(const ModuleElement& xi, const PureState& rho) {
  if (xi.shape().algebra.dim(rho.block()) != rho.dim()) {
    throw shape_error("project: state does not match the module's algebra shape");
  }
  return FiberVector{rho, xi.block(rho.block()) * rho.vector()};
}

Section Section::constant(ModuleElement xi) {
  auto owned = std::make_shared<const ModuleElement>(std::move(xi));
  Section s(owned->shape(), [owned](const PureState& rho) { return project(*owned, rho); });
  s.xi_ = owned;
  return s;
}

Section Section::generic(ModuleShape shape, Evaluator f) {
  return Section(std::move(shape), std::move(f));
}

FiberVector Section::operator()(const PureState& rho) const {
  FiberVector v = eval_(rho);
  if (v.at.block() != rho.block() || v.value.size() != shape_.rows_of(rho.block())) {
    throw shape_error("section: evaluator produced a value of the wrong fiber shape");
  }
  return v;
}

const ModuleElement& Section::element() const {
  if (!xi_) throw unsupported_error("section: not a constant section");
  return *xi_;
}

Section operator*(const Section& s, const StateFunction& l) {
  return Section::generic(s.shape(), [s, l](const PureState& rho) {
    FiberVector v = s(rho);
    v.value *= l(rho);
    return v;
  });
}

Complex fiber_inner(const FiberVector& v, const FiberVector& w) {
  if (state_distance(v.at, w.at) > 1e-10) {
    throw validation_error("fiber_inner: vectors live in fibers over different states");
  }
  if (v.value.size() != w.value.size()) {
    throw shape_error("fiber_inner: fiber dimensions differ");
  }
  return v.value.dot(w.value);
}

Complex hermitian(const Section& s, const Section& t, const PureState& rho) {
  return fiber_inner(s(rho), t(rho));
}

StateFunction h_function(const Section& s, const Section& t) {
  return StateFunction::generic(
      [s, t](const PureState& rho) { return hermitian(s, t, rho); });
}

double section_norm(const Section& s, StateSampler& sampler, int n_samples, bool augment) {
  if (n_samples < 1) throw validation_error("section_norm: need at least one sample");
  std::vector<PureState> probes;
  probes.reserve(static_cast<std::size_t>(n_samples) + 4);
  if (augment && s.is_constant()) {
    const ModuleElement& xi = s.element();
    for (BlockId k : spectrum(xi.shape().algebra)) {
      const Matrix& m = xi.block(k);
      if (m.rows() == 0 || m.norm() <= 0) continue;
      Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
      probes.emplace_back(k, svd.matrixV().col(0));
    }
  }
  for (int i = 0; i < n_samples; ++i) probes.push_back(sampler.sample());
  double sup = 0.0;
  for (const PureState& rho : probes) sup = std::max(sup, s(rho).value.norm());
  return sup;
}

Vector trivialize(const Section& s, const Chart& chart, const PureState& rho) {
  if (chart.block != rho.block()) {
    throw shape_error("trivialize: chart and state live over different blocks");
  }
  return transition_phase(chart, rho.vector()) * s(rho).value;
}

namespace {

void require_unitary(const AlgebraElement& u) {
  if (u.unitary_defect() > 1e-10) {
    throw validation_error("group_act: element is not unitary");
  }
}

}  // namespace

PureState group_act(const AlgebraElement& u, const PureState& rho) {
  require_unitary(u);
  if (u.shape().dim(rho.block()) != rho.dim()) {
    throw shape_error("group_act: state does not match the algebra shape");
  }
  return PureState(rho.block(), u.block(rho.block()) * rho.vector());
}

ModuleElement group_act(const AlgebraElement& u, const ModuleElement& xi) {
  require_unitary(u);
  return act(xi, u.adjoint());
}

FiberVector group_act(const AlgebraElement& u, const FiberVector& v) {
  require_unitary(u);
  if (u.shape().dim(v.at.block()) != v.at.dim()) {
    throw shape_error("group_act: fiber vector does not match the algebra shape");
  }
  const Vector moved = u.block(v.at.block()) * v.at.vector();
  // Both the lift and the value rotate by the phase that re-canonicalizes
  // the moved lift, so the pair stays expressed against a canonical lift.
  const Complex phase = canonical_phase(moved / moved.norm());
  return FiberVector{PureState(v.at.block(), moved), phase * v.value};
}

Vector typical_fiber_map(const ModuleElement& xi, BlockId block, const Vector& z) {
  if (xi.shape().algebra.dim(block) != z.size()) {
    throw shape_error("typical_fiber_map: vector does not match the block dimension");
  }
  if (std::abs(z.norm() - 1.0) > 1e-8) {
    throw validation_error("typical_fiber_map: z must be a unit vector");
  }
  return xi.block(block) * z;
}

double holomorphy_check(const Section& s, const PureState& rho, double step) {
  const Chart chart(rho.block(), rho.vector());
  const Vector center = Vector::Zero(rho.dim());
  auto f = [&](const Vector& at) { return trivialize(s, chart, beta_inv(chart, at)); };
  double residual = 0.0;
  for (const Vector& y : tangent_basis(chart)) {
    const Vector d = detail::wirtinger_stencil(f, center, y, /*antiholomorphic=*/true, step);
    residual = std::max(residual, d.norm());
  }
  return residual;
}

int fiber_dimension_oracle(const ModuleShape& shape, const PureState& rho) {
  const int n = shape.algebra.dim(rho.block());
  if (n != rho.dim()) throw shape_error("fiber_dimension_oracle: state/shape mismatch");
  const int d = shape.rows_of(rho.block());
  if (d == 0) return 0;
  const Vector& x = rho.vector();
  Matrix eval_map = Matrix::Zero(d, d * n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < n; ++j) eval_map(i, i * n + j) = x(j);
  }
  Eigen::JacobiSVD<Matrix> svd(eval_map);
  const auto& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? sigma(0) * 1e-10 : 0.0;
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff && sigma(i) > 0) ++rank;
  }
  return rank;
}

}  // namespace ncg
