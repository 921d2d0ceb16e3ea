// The eight verification suites.  Every suite is a pure function of
// (config, case seed) returning one worst-case residual; the runner feeds
// it independently derived seeds and keeps the maximum.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>

#include "ncg/connection.hpp"
#include "ncg/harness.hpp"
#include "ncg/parallel.hpp"

namespace ncg {

namespace {

using CaseFn = double (*)(const RunConfig&, const AlgebraShape&, const ModuleShape&,
                          std::uint64_t);

double clip(double x) { return std::max(0.0, x); }

// Chart whose domain comfortably contains rho: |<h|x>| stays away from the
// guard threshold so finite differences remain in-domain.
Chart guarded_chart(StateSampler& sampler, const PureState& rho) {
  const double floor = 0.3 / std::sqrt(static_cast<double>(rho.dim()));
  for (int attempt = 0; attempt < 256; ++attempt) {
    Chart h = sampler.sample_chart(rho.block());
    if (std::abs(h.base.dot(rho.vector())) >= floor) return h;
  }
  throw error("suite sampling: failed to find a chart containing the state");
}

BlockId pick_block(Rng& rng, const AlgebraShape& shape, int min_dim) {
  std::vector<BlockId> candidates;
  for (BlockId k : spectrum(shape)) {
    if (shape.dim(k) >= min_dim) candidates.push_back(k);
  }
  if (candidates.empty()) return 0;
  return candidates[static_cast<std::size_t>(rng.below(static_cast<int>(candidates.size())))];
}

double algebra_case(const RunConfig&, const AlgebraShape& shape, const ModuleShape&,
                    std::uint64_t seed) {
  Rng rng(seed);
  const AlgebraElement a = random_hermitian(shape, rng.next());
  const AlgebraElement b = random_hermitian(shape, rng.next());
  const double na = a.operator_norm();
  const double nb = b.operator_norm();
  double worst = 0.0;
  worst = std::max(worst, std::abs((a.adjoint() * a).operator_norm() - na * na) /
                              std::max(1.0, na * na));
  worst = std::max(worst, clip((a * b).operator_norm() - na * nb));
  const AlgebraElement c = a + kI * b;
  worst = std::max(worst, distance(c.adjoint().adjoint(), c));
  worst = std::max(worst, distance((a * b).adjoint(), b.adjoint() * a.adjoint()));
  const AlgebraElement one = AlgebraElement::unit(shape);
  worst = std::max(worst, distance(one * a, a * one));
  worst = std::max(worst, distance(one * a, a));
  worst = std::max(worst, std::abs(one.operator_norm() - 1.0));
  worst = std::max(worst, a.hermitian_defect());
  const std::uint64_t replay = rng.next();
  worst = std::max(worst, distance(random_hermitian(shape, replay),
                                   random_hermitian(shape, replay)));
  std::vector<int> permuted = shape.blocks();
  if (permuted.size() > 1) std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
  worst = std::max(worst,
                   iso_signature(shape) == iso_signature(AlgebraShape(permuted)) ? 0.0 : 1.0);
  const std::vector<BlockId> labels = spectrum(shape);
  const bool labels_ok = static_cast<int>(labels.size()) == shape.num_blocks() &&
                         labels.front() == 1 && labels.back() == shape.num_blocks();
  worst = std::max(worst, labels_ok ? 0.0 : 1.0);
  return worst;
}

double geometry_case(const RunConfig& cfg, const AlgebraShape& shape, const ModuleShape&,
                     std::uint64_t seed) {
  Rng rng(seed);
  StateSampler sampler(shape, rng.next());
  const BlockId k = BlockId(1 + rng.below(shape.num_blocks()));
  const int n = shape.dim(k);
  const PureState rho = sampler.sample_in(k);
  const Chart h = guarded_chart(sampler, rho);
  double worst = 0.0;

  // Chart round trips through two different charts.
  const ChartVector z = beta(h, rho);
  worst = std::max(worst, state_distance(beta_inv(z), rho));
  const Chart h2 = guarded_chart(sampler, rho);
  worst = std::max(worst, state_distance(beta_inv(beta(h2, rho)), rho));

  // Preferred lift: both routes agree, positive overlap with the base.
  const Vector omega = omega_vector(h, rho);
  const double w = 1.0 / (1.0 + z.value.squaredNorm());
  worst = std::max(worst, (omega - std::sqrt(w) * (z.value + h.base)).norm());
  const Complex overlap = h.base.dot(omega);
  worst = std::max(worst, std::abs(overlap.imag()) + clip(-overlap.real()));

  // Evaluation ignores the lift's phase.
  const AlgebraElement a = random_hermitian(shape, rng.next());
  const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  const Vector rotated = phase * rho.vector();
  worst = std::max(worst,
                   std::abs(rotated.dot(a.block(k) * rotated) - evaluate(rho, a)));

  // Sup of rho(A*A) over states is ||A||^2, attained at the top eigenstate.
  const AlgebraElement p = a.adjoint() * a;
  const double norm2 = a.operator_norm() * a.operator_norm();
  worst = std::max(worst, clip(evaluate(rho, p).real() - norm2) / std::max(1.0, norm2));
  double best = 0.0;
  for (const PureState& top : top_eigenstates(p)) {
    best = std::max(best, evaluate(top, p).real());
  }
  worst = std::max(worst, std::abs(best - norm2) / std::max(1.0, norm2));

  if (n >= 2) {
    const Vector u = sampler.sample_tangent(h);
    const Vector v = sampler.sample_tangent(h);
    const Vector& zv = z.value;
    // Form vs metric, against an inline evaluation of the displayed formula.
    const Complex g = kahler_metric(h, zv, u, v);
    const double ww = 1.0 / (1.0 + zv.squaredNorm());
    const Complex form_direct =
        kI * (-ww * v.dot(u) + ww * ww * v.dot(zv) * zv.dot(u));
    worst = std::max(worst, std::abs(kahler_form(h, zv, u, v) - form_direct));
    worst = std::max(worst, std::abs(form_direct + kI * g));
    const Complex guu = kahler_metric(h, zv, u, u);
    worst = std::max(worst, std::abs(guu.imag()) + clip(-guu.real()));
    worst = std::max(worst, std::abs(kahler_metric(h, Vector::Zero(n), u, v) - v.dot(u)));

    // Finite-difference Wirtinger derivatives against the closed forms.
    auto fa = [&](const PureState& s) { return evaluate(s, a); };
    for (Wirtinger kind : {Wirtinger::holomorphic, Wirtinger::antiholomorphic}) {
      const Complex fd = wirtinger_derivative(fa, h, zv, u, kind, cfg.fd_step);
      const Complex exact = gelfand_chart_derivative(a, h, zv, u, kind);
      worst = std::max(worst, std::abs(fd - exact));
    }
  }
  return worst;
}

double module_case(const RunConfig&, const AlgebraShape& shape, const ModuleShape& mshape,
                   std::uint64_t seed) {
  Rng rng(seed);
  const ModuleElement xi = random_module_element(mshape, rng.next());
  const ModuleElement eta = random_module_element(mshape, rng.next());
  const AlgebraElement a = random_hermitian(shape, rng.next());
  const AlgebraElement b = random_hermitian(shape, rng.next());
  double worst = 0.0;
  worst = std::max(worst, distance(inner(xi, eta).adjoint(), inner(eta, xi)));
  worst = std::max(worst, distance(inner(eta, act(xi, a)), inner(eta, xi) * a));
  worst = std::max(worst, module_norm(act(act(xi, a), b) - act(xi, a * b)));
  const AlgebraElement gram = inner(xi, xi);
  for (BlockId k : spectrum(shape)) {
    Eigen::SelfAdjointEigenSolver<Matrix> eigen(gram.block(k));
    worst = std::max(worst, clip(-eigen.eigenvalues().minCoeff()));
  }
  const double mn = module_norm(xi);
  worst = std::max(worst, std::abs(mn * mn - gram.operator_norm()) / std::max(1.0, mn * mn));
  worst = std::max(worst, clip(inner(xi, eta).operator_norm() - mn * module_norm(eta)));
  return worst;
}

double gelfand_case(const RunConfig& cfg, const AlgebraShape& shape, const ModuleShape&,
                    std::uint64_t seed) {
  Rng rng(seed);
  StateSampler sampler(shape, rng.next());
  const PureState rho = sampler.sample();
  const BlockId k = rho.block();
  const int n = shape.dim(k);
  const AlgebraElement a = random_hermitian(shape, rng.next());
  const AlgebraElement b = random_hermitian(shape, rng.next());
  const StateFunction fa = StateFunction::gelfand(a);
  const StateFunction fb = StateFunction::gelfand(b);
  const double step = cfg.fd_step;
  double worst = 0.0;

  // Products against the matrix-product oracle, analytic and FD routes.
  const Complex fab = evaluate(rho, a * b);
  worst = std::max(worst, std::abs(star(fa, fb, step)(rho) - fab));
  worst = std::max(worst,
                   std::abs(star(fa.as_generic(), fb.as_generic(), step)(rho) - fab));
  // Commutator against the matrix commutator.
  const Complex comm = star(fa, fb, step)(rho) - star(fb, fa, step)(rho);
  worst = std::max(worst, std::abs(comm - evaluate(rho, a * b - b * a)));
  // The unit is neutral on both sides.
  const StateFunction f1 = StateFunction::gelfand(AlgebraElement::unit(shape));
  worst = std::max(worst, std::abs(star(f1, fa, step)(rho) - fa(rho)));
  worst = std::max(worst, std::abs(star(fa, f1, step)(rho) - fa(rho)));
  // Involution follows the adjoint.
  const AlgebraElement c = a + kI * b;
  worst = std::max(worst, std::abs(StateFunction::gelfand(c).conjugated()(rho) -
                                   evaluate(rho, c.adjoint())));

  // Closed-form and solver fields agree.
  const Chart center_chart(k, rho.vector());
  const Vector center = Vector::Zero(n);
  const Vector field_analytic = hamiltonian_field(fa, center_chart, center, step).value;
  const Vector field_solved =
      hamiltonian_field(fa.as_generic(), center_chart, center, step).value;
  worst = std::max(worst, (field_analytic - field_solved).norm());

  // Gelfand functions satisfy the second-order membership condition...
  worst = std::max(worst, ku_membership_check(fa, rho, cfg.tol_fd, step).residual());
  // ...and a squared one fails it by a margin, when there is room to move.
  if (n >= 2) {
    const Vector y = sampler.sample_tangent(center_chart);
    AlgebraElement witness(shape);
    witness.block(k) = rho.vector() * y.adjoint() + y * rho.vector().adjoint();
    const StateFunction fw = StateFunction::gelfand(witness);
    const StateFunction fw2 = StateFunction::generic([fw](const PureState& s) {
      const Complex v = fw(s);
      return v * v;
    });
    const KuReport report = ku_membership_check(fw2, rho, 1e-2, step);
    worst = std::max(worst, report.residual() > 1e-2 ? 0.0 : 1.0);
  }

  // Norm equality through the eigenvector-augmented estimate.
  StateSampler norm_sampler(shape, rng.next());
  worst = std::max(worst,
                   std::abs(star_norm(fa, norm_sampler, 8, true, step) - a.operator_norm()));
  return worst;
}

double bundle_case(const RunConfig&, const AlgebraShape& shape, const ModuleShape& mshape,
                   std::uint64_t seed) {
  Rng rng(seed);
  StateSampler sampler(shape, rng.next());
  const PureState rho = sampler.sample();
  const BlockId k = rho.block();
  const ModuleElement xi = random_module_element(mshape, rng.next());
  const ModuleElement eta = random_module_element(mshape, rng.next());
  const Section psi_xi = Section::constant(xi);
  const Section psi_eta = Section::constant(eta);
  double worst = 0.0;

  // Fiber pairing against the state applied to the module pairing.
  const FiberVector v = project(xi, rho);
  const FiberVector u = project(eta, rho);
  const Complex paired = evaluate(rho, inner(xi, eta));
  worst = std::max(worst, std::abs(fiber_inner(v, u) - paired));
  worst = std::max(worst, std::abs(h_function(psi_xi, psi_eta)(rho) - paired));

  // Constant sections are linear in the module element.
  const Complex scale(rng.normal(), rng.normal());
  const FiberVector combined = project(xi + scale * eta, rho);
  worst = std::max(worst, (combined.value - (v.value + scale * u.value)).norm());

  // Chart transition law for the trivialized values.
  const Chart h1 = guarded_chart(sampler, rho);
  const Chart h2 = guarded_chart(sampler, rho);
  const Complex factor = transition_phase(h1, rho.vector()) *
                         std::conj(transition_phase(h2, rho.vector()));
  worst = std::max(worst, (trivialize(psi_xi, h1, rho) -
                           factor * trivialize(psi_xi, h2, rho)).norm());

  // Unitary action: equivariance of project, invariance of the pairing and
  // of the typical-fiber values.
  const AlgebraElement g = random_unitary(shape, rng.next());
  const FiberVector moved = group_act(g, v);
  const FiberVector direct = project(group_act(g, xi), group_act(g, rho));
  worst = std::max(worst, state_distance(moved.at, direct.at));
  worst = std::max(worst, (moved.value - direct.value).norm());
  worst = std::max(worst, std::abs(fiber_inner(moved, group_act(g, u)) - fiber_inner(v, u)));
  const Vector zvec = sampler.sample_in(k).vector();
  worst = std::max(worst, (typical_fiber_map(group_act(g, xi), k, g.block(k) * zvec) -
                           typical_fiber_map(xi, k, zvec)).norm());

  // Fiber dimension from the rank oracle.
  worst = std::max(worst, std::abs(static_cast<double>(fiber_dimension_oracle(mshape, rho) -
                                                       mshape.rows_of(k))));

  // Local pairing formula at a chart center against the module route.
  const Chart h3 = guarded_chart(sampler, rho);
  const Vector z3 = beta(h3, rho).value;
  const double w3 = 1.0 / (1.0 + z3.squaredNorm());
  const Complex lhs = typical_fiber_map(eta, k, h3.base).dot(trivialize(psi_xi, h3, rho));
  const Complex rhs =
      std::sqrt(w3) * h3.base.dot(inner(eta, xi).block(k) * (z3 + h3.base));
  worst = std::max(worst, std::abs(lhs - rhs));
  return worst;
}

double connection_case(const RunConfig& cfg, const AlgebraShape& shape,
                       const ModuleShape& mshape, std::uint64_t seed) {
  Rng rng(seed);
  StateSampler sampler(shape, rng.next());
  const BlockId k = pick_block(rng, shape, 2);
  if (k == 0) return 0.0;  // no block has directions to move in
  const int n = shape.dim(k);
  const PureState rho = sampler.sample_in(k);
  const ModuleElement xi = random_module_element(mshape, rng.next());
  const AlgebraElement a = random_hermitian(shape, rng.next());
  const Section psi = Section::constant(xi);
  const StateFunction fa = StateFunction::gelfand(a);
  const double step = cfg.fd_step;
  const Chart center_chart(k, rho.vector());
  const Vector center = Vector::Zero(n);
  const Vector y = sampler.sample_tangent(center_chart);
  const Vector z = sampler.sample_tangent(center_chart);
  double worst = 0.0;

  // Trivialization cocycle between two overlapping charts.
  Chart h1 = guarded_chart(sampler, rho);
  Chart h2 = guarded_chart(sampler, rho);
  for (int attempt = 0; attempt < 256; ++attempt) {
    if (std::abs(h1.base.dot(h2.base)) >= 0.3 / std::sqrt(static_cast<double>(n))) break;
    h2 = guarded_chart(sampler, rho);
  }
  const Vector y2 = sampler.sample_tangent(h2);
  worst = std::max(worst, cocycle_check(h1, h2, rho, y2, step));

  // Curvature in holomorphic direction pairs, with the exact zero at Y = Z.
  worst = std::max(worst, flatness_check(psi, rho, y, z, step));
  worst = std::max(worst, flatness_check(psi, rho, y, y, step));

  // Constant sections trivialize holomorphically.
  worst = std::max(worst, holomorphy_check(psi, rho, step));

  // Stencil derivative against the closed form xi_k Y.
  const FiberVector d_fd = covariant_derivative(psi, rho, y, DerivMode::finite_difference, step);
  const FiberVector d_an = covariant_derivative(psi, rho, y, DerivMode::analytic, step);
  worst = std::max(worst, (d_fd.value - d_an.value).norm());

  // Leibniz rule for scalar multiples.
  const Vector lhs = covariant_derivative(psi * fa, rho, y, DerivMode::finite_difference, step).value;
  const Vector rhs = gelfand_chart_derivative(a, center_chart, center, y,
                                              Wirtinger::holomorphic) * psi(rho).value +
                     fa(rho) * d_an.value;
  worst = std::max(worst, (lhs - rhs).norm());

  // Star action: finite differences against the analytic route.
  const FiberVector act_fd = star_action(psi, fa, rho, DerivMode::finite_difference, step);
  const FiberVector act_an = star_action(psi, fa, rho, DerivMode::analytic, step);
  worst = std::max(worst, (act_fd.value - act_an.value).norm());

  // Transport: the minimal-norm solution moves the base point correctly and
  // feeds the derivative formula; adding a null direction changes nothing.
  const Chart hc = guarded_chart(sampler, rho);
  const Vector z0 = 0.4 * sampler.sample_tangent(hc);
  const Vector y0 = sampler.sample_tangent(hc);
  const AlgebraElement transport = transport_solver(shape, hc, z0, y0);
  const Vector vpoint = z0 + hc.base;
  worst = std::max(worst, (transport.block(k) * vpoint - y0).norm());
  auto f = [&](const Vector& at) { return trivialize(psi, hc, beta_inv(hc, at)); };
  const Vector df = detail::wirtinger_stencil(f, z0, y0, /*antiholomorphic=*/false, step);
  const double w0 = 1.0 / (1.0 + z0.squaredNorm());
  auto formula_value = [&](const Matrix& kmat) {
    return (std::sqrt(w0) *
            (xi.block(k) * (kmat * vpoint) - 0.5 * w0 * z0.dot(y0) * (xi.block(k) * vpoint)))
        .eval();
  };
  const Vector via_minimal = formula_value(transport.block(k));
  worst = std::max(worst, (df - via_minimal).norm());
  const Vector null_dir = tangent_basis(Chart(k, vpoint)).front();
  const Matrix shifted = transport.block(k) + y0 * null_dir.adjoint();
  worst = std::max(worst, (formula_value(shifted) - via_minimal).norm());
  return worst;
}

double serre_swan_case(const RunConfig& cfg, const AlgebraShape& shape,
                       const ModuleShape& mshape, std::uint64_t seed) {
  Rng rng(seed);
  StateSampler sampler(shape, rng.next());
  const PureState rho = sampler.sample();
  const ModuleElement xi = random_module_element(mshape, rng.next());
  const ModuleElement eta = random_module_element(mshape, rng.next());
  const AlgebraElement a = random_hermitian(shape, rng.next());
  const StateFunction fa = StateFunction::gelfand(a);
  const Section psi_xi = Section::constant(xi);
  const double step = cfg.fd_step;
  double worst = 0.0;

  // The star action of f_A on a constant section is the module action.
  const FiberVector acted = star_action(psi_xi, fa, rho, DerivMode::analytic, step);
  worst = std::max(worst, (acted.value - project(act(xi, a), rho).value).norm());

  // Pairing compatibility: H(eta-section, xi-section * f_A) equals
  // H(eta-section, xi-section) * f_A.
  const FiberVector paired_lhs = project(eta, rho);
  const Complex lhs = fiber_inner(paired_lhs, acted);
  const Complex rhs = star(StateFunction::gelfand(inner(eta, xi)), fa, step)(rho);
  worst = std::max(worst, std::abs(lhs - rhs));

  // Sup of fiber norms is the module norm (augmented estimate is exact).
  StateSampler norm_sampler(shape, rng.next());
  worst = std::max(worst,
                   std::abs(section_norm(psi_xi, norm_sampler, 8, true) - module_norm(xi)));
  return worst;
}

double reconstruction_case(const RunConfig&, const AlgebraShape& shape, const ModuleShape&,
                           std::uint64_t seed) {
  Rng rng(seed);
  const AlgebraElement re = random_hermitian(shape, rng.next());
  const AlgebraElement im = random_hermitian(shape, rng.next());
  const AlgebraElement target = re + kI * im;
  std::vector<std::pair<PureState, Complex>> samples;
  for (BlockId k : spectrum(shape)) {
    const int n = shape.dim(k);
    auto push = [&](const Vector& x) {
      PureState s(k, x);
      const Complex value = evaluate(s, target);
      samples.emplace_back(std::move(s), value);
    };
    for (int i = 0; i < n; ++i) push(Vector::Unit(n, i));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        push(Vector::Unit(n, i) + Vector::Unit(n, j));
        push(Vector::Unit(n, i) + kI * Vector::Unit(n, j));
      }
    }
  }
  const Reconstruction rec = reconstruct(samples, shape);
  return std::max(distance(rec.element, target), rec.residual);
}

const std::map<std::string, CaseFn>& registry() {
  static const std::map<std::string, CaseFn> table = {
      {"algebra", algebra_case},       {"geometry", geometry_case},
      {"gelfand", gelfand_case},       {"module", module_case},
      {"bundle", bundle_case},         {"connection", connection_case},
      {"serre-swan", serre_swan_case}, {"reconstruction", reconstruction_case},
  };
  return table;
}

SuiteReport run_suite_impl(const std::string& name, const RunConfig& config, int threads,
                           bool parallel) {
  const auto it = registry().find(name);
  if (it == registry().end()) {
    throw validation_error("run_suite: unknown suite '" + name + "'");
  }
  const CaseFn fn = it->second;
  const AlgebraShape shape = config.algebra_shape();
  const ModuleShape mshape = config.module_shape();
  SuiteReport report;
  report.suite = name;
  report.cases = config.samples;
  report.tolerance = suite_uses_fd_tolerance(name) ? config.tol_fd : config.tol_analytic;
  const auto started = std::chrono::steady_clock::now();
  auto one_case = [&](int i) {
    return fn(config, shape, mshape, derive_seed(config.seed, name, static_cast<std::uint64_t>(i)));
  };
  report.max_residual = parallel ? max_over_cases(config.samples, one_case, threads)
                                 : max_over_cases_serial(config.samples, one_case);
  const auto finished = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count();
  report.pass = report.max_residual <= report.tolerance;
  return report;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const RunConfig& config, int threads) {
  return run_suite_impl(name, config, threads, /*parallel=*/true);
}

SuiteReport run_suite_serial(const std::string& name, const RunConfig& config) {
  return run_suite_impl(name, config, 0, /*parallel=*/false);
}

}  // namespace ncg
