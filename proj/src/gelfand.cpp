#include "ncg/gelfand.hpp"

#include <cmath>
#include <map>
#include <string>

namespace ncg {

StateFunction StateFunction::gelfand(AlgebraElement a) {
  StateFunction f;
  f.observable_ = std::make_shared<const AlgebraElement>(std::move(a));
  f.eval_ = [obs = f.observable_](const PureState& rho) { return evaluate(rho, *obs); };
  return f;
}

StateFunction StateFunction::generic(Evaluator f) {
  StateFunction out;
  out.eval_ = std::move(f);
  return out;
}

const AlgebraElement& StateFunction::observable() const {
  if (!observable_) throw unsupported_error("state function: no observable attached");
  return *observable_;
}

StateFunction StateFunction::conjugated() const {
  if (is_gelfand()) return gelfand(observable().adjoint());
  return generic([f = eval_](const PureState& rho) { return std::conj(f(rho)); });
}

StateFunction StateFunction::as_generic() const {
  return generic(eval_);
}

namespace {

double weight(const Vector& z) { return 1.0 / (1.0 + z.squaredNorm()); }

const Matrix& chart_block(const AlgebraElement& a, const Chart& chart) {
  if (a.shape().dim(chart.block) != chart.dim()) {
    throw shape_error("gelfand chart formula: observable/chart dimension mismatch");
  }
  return a.block(chart.block);
}

void require_coordinate(const Chart& chart, const Vector& z, const char* what) {
  if (z.size() != chart.base.size() || std::abs(chart.base.dot(z)) > 1e-10) {
    throw chart_error(std::string(what) + ": coordinate not in the chart plane");
  }
}

}  // namespace

Complex gelfand_in_chart(const AlgebraElement& a, const Chart& chart, const Vector& z) {
  require_coordinate(chart, z, "gelfand_in_chart");
  const Matrix& m = chart_block(a, chart);
  const Vector v = z + chart.base;
  return weight(z) * v.dot(m * v);
}

Complex gelfand_chart_derivative(const AlgebraElement& a, const Chart& chart, const Vector& z,
                                 const Vector& y, Wirtinger kind) {
  require_coordinate(chart, z, "gelfand_chart_derivative");
  const Matrix& m = chart_block(a, chart);
  const Vector v = z + chart.base;
  const Vector mv = m * v;
  const double w = weight(z);
  const Complex q = v.dot(mv);
  if (kind == Wirtinger::holomorphic) {
    return -w * w * z.dot(y) * q + w * v.dot(m * y);
  }
  return -w * w * y.dot(z) * q + w * y.dot(mv);
}

namespace {

// Field value as a plain vector in H_h.
Vector hamiltonian_field_vector(const StateFunction& l, const Chart& chart, const Vector& z,
                                double step) {
  if (l.is_gelfand()) {
    const Matrix& m = chart_block(l.observable(), chart);
    const Vector v = z + chart.base;
    const Vector mv = m * v;
    return -kI * (mv - chart.base.dot(mv) * v);
  }
  const std::vector<Vector> basis = tangent_basis(chart);
  const int dim = static_cast<int>(basis.size());
  if (dim == 0) return Vector::Zero(chart.dim());
  auto f = [&](const Vector& at) { return l(beta_inv(chart, at)); };
  Vector rhs(dim);
  for (int j = 0; j < dim; ++j) {
    rhs(j) = detail::wirtinger_stencil(f, z, basis[j], /*antiholomorphic=*/true, step);
  }
  const double w = weight(z);
  Matrix system(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      Complex entry = -w * w * basis[j].dot(z) * z.dot(basis[k]);
      if (j == k) entry += w;
      system(j, k) = kI * entry;
    }
  }
  const Vector coeff = system.colPivHouseholderQr().solve(rhs);
  const double defect = (system * coeff - rhs).norm();
  if (!(defect <= 1e-8 * std::max(1.0, rhs.norm()))) {
    throw error("hamiltonian field: metric system failed to solve");
  }
  Vector x = Vector::Zero(chart.dim());
  for (int k = 0; k < dim; ++k) x += coeff(k) * basis[k];
  return x;
}

// Holomorphic directional derivative of l in the chart, analytic when the
// observable is attached.
Complex directional_derivative(const StateFunction& l, const Chart& chart, const Vector& z,
                               const Vector& direction, double step) {
  if (l.is_gelfand()) {
    return gelfand_chart_derivative(l.observable(), chart, z, direction,
                                    Wirtinger::holomorphic);
  }
  auto f = [&](const Vector& at) { return l(beta_inv(chart, at)); };
  return detail::wirtinger_stencil(f, z, direction, /*antiholomorphic=*/false, step);
}

}  // namespace

ChartVector hamiltonian_field(const StateFunction& l, const Chart& chart, const Vector& z,
                              double step) {
  require_coordinate(chart, z, "hamiltonian_field");
  return ChartVector(chart, hamiltonian_field_vector(l, chart, z, step));
}

StateFunction star(const StateFunction& l, const StateFunction& m, double step) {
  auto eval = [l, m, step](const PureState& rho) {
    const Chart chart(rho.block(), rho.vector());
    const Vector center = Vector::Zero(rho.dim());
    const Vector field = hamiltonian_field_vector(m, chart, center, step);
    const Complex dl = directional_derivative(l, chart, center, field, step);
    return l(rho) * m(rho) + kI * dl;
  };
  return StateFunction::generic(std::move(eval));
}

double star_norm(const StateFunction& l, StateSampler& sampler, int n_samples, bool augment,
                 double step) {
  if (n_samples < 1) throw validation_error("star_norm: need at least one sample");
  std::vector<PureState> probes;
  probes.reserve(static_cast<std::size_t>(n_samples) + 4);
  if (augment && l.is_gelfand()) {
    const AlgebraElement& a = l.observable();
    for (PureState& rho : top_eigenstates(a.adjoint() * a)) probes.push_back(std::move(rho));
  }
  for (int i = 0; i < n_samples; ++i) probes.push_back(sampler.sample());
  const StateFunction ll = star(l.conjugated(), l, step);
  double sup = 0.0;
  for (const PureState& rho : probes) sup = std::max(sup, std::sqrt(std::abs(ll(rho))));
  return sup;
}

KuReport ku_membership_check(const StateFunction& l, const PureState& rho, double tol,
                             double step) {
  const Chart chart(rho.block(), rho.vector());
  const Vector center = Vector::Zero(rho.dim());
  const std::vector<Vector> basis = tangent_basis(chart);
  auto f = [&](const Vector& at) { return l(beta_inv(chart, at)); };
  KuReport report{0.0, 0.0, false};
  for (const Vector& outer : basis) {
    for (const Vector& inner_dir : basis) {
      for (bool anti : {false, true}) {
        auto first = [&](const Vector& at) {
          return detail::wirtinger_stencil(f, at, inner_dir, anti, step);
        };
        const Complex second = detail::wirtinger_stencil(first, center, outer, anti, step);
        double& slot = anti ? report.max_antiholomorphic : report.max_holomorphic;
        slot = std::max(slot, std::abs(second));
      }
    }
  }
  report.member = report.residual() <= tol;
  return report;
}

namespace {

// E_ii, then E_ij + E_ji, then i(E_ij - E_ji) for i < j: a real basis of the
// Hermitian n x n matrices, in a fixed order.
std::vector<Matrix> hermitian_basis(int n) {
  std::vector<Matrix> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    Matrix e = Matrix::Zero(n, n);
    e(i, i) = 1.0;
    basis.push_back(std::move(e));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      e(j, i) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = kI;
      e(j, i) = -kI;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

}  // namespace

Reconstruction reconstruct(const std::vector<std::pair<PureState, Complex>>& samples,
                           const AlgebraShape& shape) {
  std::map<BlockId, std::vector<const std::pair<PureState, Complex>*>> by_block;
  for (const auto& sample : samples) {
    const PureState& rho = sample.first;
    if (shape.dim(rho.block()) != rho.dim()) {
      throw shape_error("reconstruct: sample state does not match the algebra shape");
    }
    by_block[rho.block()].push_back(&sample);
  }
  AlgebraElement element(shape);
  for (BlockId k : spectrum(shape)) {
    const int n = shape.dim(k);
    const auto& rows = by_block[k];
    const int m = static_cast<int>(rows.size());
    const std::vector<Matrix> basis = hermitian_basis(n);
    const int unknowns = n * n;
    Eigen::MatrixXd design(std::max(m, 1), unknowns);
    design.setZero();
    Eigen::VectorXd rhs_re(std::max(m, 1)), rhs_im(std::max(m, 1));
    rhs_re.setZero();
    rhs_im.setZero();
    for (int i = 0; i < m; ++i) {
      const Vector& x = rows[i]->first.vector();
      for (int b = 0; b < unknowns; ++b) {
        design(i, b) = x.dot(basis[b] * x).real();
      }
      rhs_re(i) = rows[i]->second.real();
      rhs_im(i) = rows[i]->second.imag();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sigma = svd.singularValues();
    const double cutoff = sigma.size() > 0 ? sigma(0) * 1e-10 : 0.0;
    int rank = 0;
    for (int i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > cutoff && sigma(i) > 0) ++rank;
    }
    if (m < unknowns || rank < unknowns) {
      throw underdetermined_error(
          k, "reconstruct: samples underdetermine block " + std::to_string(k) + " (rank " +
                 std::to_string(rank) + " < " + std::to_string(unknowns) + ")");
    }
    const Eigen::VectorXd c_re = svd.solve(rhs_re);
    const Eigen::VectorXd c_im = svd.solve(rhs_im);
    Matrix& out = element.block(k);
    for (int b = 0; b < unknowns; ++b) {
      out += c_re(b) * basis[b] + kI * c_im(b) * basis[b];
    }
  }
  double residual = 0.0;
  for (const auto& [rho, value] : samples) {
    residual = std::max(residual, std::abs(evaluate(rho, element) - value));
  }
  return Reconstruction{std::move(element), residual};
}

std::vector<PureState> top_eigenstates(const AlgebraElement& hermitian) {
  std::vector<PureState> states;
  for (BlockId k : spectrum(hermitian.shape())) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian.block(k));
    const int n = hermitian.shape().dim(k);
    states.emplace_back(k, solver.eigenvectors().col(n - 1));
  }
  return states;
}

}  // namespace ncg
