// Standalone acceptance checks.  Each criterion prints one line and the
// process exits 0 only if every criterion passes.  Tolerances are pinned
// here and are independent of any run configuration.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ncg/connection.hpp"
#include "ncg/harness.hpp"

using namespace ncg;

namespace {

constexpr std::uint64_t kSeed = 42;

std::uint64_t seed_for(const char* label, std::uint64_t index) {
  return derive_seed(kSeed, label, index);
}

Chart guarded_chart(StateSampler& sampler, const PureState& rho) {
  const double floor = 0.3 / std::sqrt(static_cast<double>(rho.dim()));
  for (;;) {
    Chart h = sampler.sample_chart(rho.block());
    if (std::abs(h.base.dot(rho.vector())) >= floor) return h;
  }
}

struct Line {
  bool pass = true;
  std::string detail;

  void note(const char* what, double value, double tol) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %.2e (tol %.0e)", what, value, tol);
    if (!detail.empty()) detail += ", ";
    detail += buf;
    pass = pass && value <= tol;
  }

  void require(const char* what, bool ok) {
    if (!detail.empty()) detail += ", ";
    detail += what;
    detail += ok ? " ok" : " violated";
    pass = pass && ok;
  }
};

const AlgebraShape kShape({2, 3});
const ModuleShape kModule(kShape, {3, 1});

Line star_homomorphism() {
  Line line;
  double worst_analytic = 0.0;
  double worst_fd = 0.0;
  for (std::uint64_t p = 0; p < 20; ++p) {
    const AlgebraElement a = random_hermitian(kShape, seed_for("acc1-a", p));
    const AlgebraElement b = random_hermitian(kShape, seed_for("acc1-b", p));
    const StateFunction fa = StateFunction::gelfand(a);
    const StateFunction fb = StateFunction::gelfand(b);
    const StateFunction analytic = star(fa, fb);
    const StateFunction fd = star(fa.as_generic(), fb.as_generic());
    const AlgebraElement ab = a * b;
    StateSampler sampler(kShape, seed_for("acc1-s", p));
    for (int i = 0; i < 200; ++i) {
      const PureState rho = sampler.sample();
      const Complex truth = evaluate(rho, ab);
      worst_analytic = std::max(worst_analytic, std::abs(analytic(rho) - truth));
      worst_fd = std::max(worst_fd, std::abs(fd(rho) - truth));
    }
  }
  line.note("analytic", worst_analytic, 1e-8);
  line.note("fd", worst_fd, 1e-5);
  return line;
}

Line norm_recovery() {
  Line line;
  double worst = 0.0;
  double worst_excess = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const AlgebraElement a = random_hermitian(kShape, seed_for("acc2-a", i));
    const StateFunction f = StateFunction::gelfand(a);
    const double norm = a.operator_norm();
    StateSampler augmented(kShape, seed_for("acc2-s", i));
    worst = std::max(worst, std::abs(star_norm(f, augmented, 8, true) - norm));
    StateSampler plain(kShape, seed_for("acc2-p", i));
    worst_excess =
        std::max(worst_excess, star_norm(f, plain, 32, false) - norm);
  }
  line.note("augmented error", worst, 1e-9);
  line.note("plain excess", std::max(worst_excess, 0.0), 1e-9);
  return line;
}

Line membership() {
  Line line;
  double worst_member = 0.0;
  double least_nonmember = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < 20; ++i) {
    StateSampler sampler(kShape, seed_for("acc3-s", i));
    const PureState rho = sampler.sample();
    const AlgebraElement a = random_hermitian(kShape, seed_for("acc3-a", i));
    worst_member =
        std::max(worst_member, ku_membership_check(StateFunction::gelfand(a), rho).residual());

    const Chart chart(rho.block(), rho.vector());
    const Vector y = sampler.sample_tangent(chart);
    AlgebraElement witness(kShape);
    witness.block(rho.block()) =
        rho.vector() * y.adjoint() + y * rho.vector().adjoint();
    const StateFunction fw = StateFunction::gelfand(witness);
    const StateFunction fw2 = StateFunction::generic([fw](const PureState& s) {
      const Complex v = fw(s);
      return v * v;
    });
    least_nonmember = std::min(least_nonmember, ku_membership_check(fw2, rho).residual());
  }
  line.note("member residual", worst_member, 1e-4);
  line.require("non-member residual exceeds 1e-2", least_nonmember > 1e-2);
  return line;
}

Line serre_swan() {
  Line line;
  double worst_analytic = 0.0;
  double worst_fd = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const ModuleElement xi = random_module_element(kModule, seed_for("acc4-xi", i));
    const AlgebraElement a = random_hermitian(kShape, seed_for("acc4-a", i));
    StateSampler sampler(kShape, seed_for("acc4-s", i));
    const PureState rho = sampler.sample();
    const Section psi = Section::constant(xi);
    const StateFunction fa = StateFunction::gelfand(a);
    const Vector truth = project(act(xi, a), rho).value;
    worst_analytic = std::max(
        worst_analytic, (star_action(psi, fa, rho, DerivMode::analytic).value - truth).norm());
    worst_fd = std::max(
        worst_fd,
        (star_action(psi, fa, rho, DerivMode::finite_difference).value - truth).norm());
  }
  line.note("analytic", worst_analytic, 1e-8);
  line.note("fd", worst_fd, 1e-5);
  return line;
}

Line metric_compatibility() {
  Line line;
  double worst_pointwise = 0.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const ModuleElement xi = random_module_element(kModule, seed_for("acc5-xi", i));
    const ModuleElement eta = random_module_element(kModule, seed_for("acc5-eta", i));
    StateSampler sampler(kShape, seed_for("acc5-s", i));
    const PureState rho = sampler.sample();
    const Complex direct = fiber_inner(project(xi, rho), project(eta, rho));
    worst_pointwise =
        std::max(worst_pointwise, std::abs(direct - evaluate(rho, inner(xi, eta))));
  }
  line.note("pointwise", worst_pointwise, 1e-12);

  double worst_compat = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const ModuleElement xi = random_module_element(kModule, seed_for("acc5b-xi", i));
    const ModuleElement eta = random_module_element(kModule, seed_for("acc5b-eta", i));
    const AlgebraElement a = random_hermitian(kShape, seed_for("acc5b-a", i));
    StateSampler sampler(kShape, seed_for("acc5b-s", i));
    const PureState rho = sampler.sample();
    const StateFunction fa = StateFunction::gelfand(a);
    const FiberVector acted = star_action(Section::constant(xi), fa, rho);
    const Complex lhs = fiber_inner(project(eta, rho), acted);
    const Complex rhs = star(StateFunction::gelfand(inner(eta, xi)), fa)(rho);
    worst_compat = std::max(worst_compat, std::abs(lhs - rhs));
  }
  line.note("H-star", worst_compat, 1e-8);

  double worst_norm = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const ModuleElement xi = random_module_element(kModule, seed_for("acc5c-xi", i));
    StateSampler sampler(kShape, seed_for("acc5c-s", i));
    worst_norm = std::max(
        worst_norm,
        std::abs(section_norm(Section::constant(xi), sampler, 8, true) - module_norm(xi)));
  }
  line.note("section norm", worst_norm, 1e-9);
  return line;
}

Line bundle_structure() {
  Line line;
  double worst_transition = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    StateSampler sampler(kShape, seed_for("acc6-s", i));
    const PureState rho = sampler.sample();
    const ModuleElement xi = random_module_element(kModule, seed_for("acc6-xi", i));
    const Section psi = Section::constant(xi);
    const Chart h1 = guarded_chart(sampler, rho);
    const Chart h2 = guarded_chart(sampler, rho);
    const Complex factor = transition_phase(h1, rho.vector()) *
                           std::conj(transition_phase(h2, rho.vector()));
    worst_transition = std::max(
        worst_transition,
        (trivialize(psi, h1, rho) - factor * trivialize(psi, h2, rho)).norm());
  }
  line.note("transition", worst_transition, 1e-10);

  double worst_orbit = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    StateSampler sampler(kShape, seed_for("acc6b-s", i));
    const PureState rho = sampler.sample();
    const BlockId k = rho.block();
    const ModuleElement xi = random_module_element(kModule, seed_for("acc6b-xi", i));
    const AlgebraElement u = random_unitary(kShape, seed_for("acc6b-u", i));
    const Vector z = rho.vector();
    worst_orbit =
        std::max(worst_orbit, (typical_fiber_map(group_act(u, xi), k, u.block(k) * z) -
                               typical_fiber_map(xi, k, z)).norm());
  }
  line.note("orbit", worst_orbit, 1e-12);

  bool dims_ok = true;
  for (std::uint64_t i = 0; i < 100; ++i) {
    StateSampler sampler(kShape, seed_for("acc6c-s", i));
    const PureState rho = sampler.sample();
    dims_ok = dims_ok &&
              fiber_dimension_oracle(kModule, rho) == kModule.rows_of(rho.block());
  }
  line.require("fiber dimensions match", dims_ok);
  return line;
}

Line connection_laws() {
  Line line;
  double worst_cocycle = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    StateSampler sampler(kShape, seed_for("acc7-s", i));
    const PureState rho = sampler.sample();
    const int n = rho.dim();
    Chart h1 = guarded_chart(sampler, rho);
    Chart h2 = guarded_chart(sampler, rho);
    while (std::abs(h1.base.dot(h2.base)) < 0.3 / std::sqrt(static_cast<double>(n))) {
      h2 = guarded_chart(sampler, rho);
    }
    const Vector y = sampler.sample_tangent(h2);
    if (y.isZero()) continue;  // one-dimensional block, nothing to vary
    worst_cocycle = std::max(worst_cocycle, cocycle_check(h1, h2, rho, y));
  }
  line.note("cocycle", worst_cocycle, 1e-6);

  double worst_flat = 0.0;
  double worst_holo = 0.0;
  double worst_leibniz = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    StateSampler sampler(kShape, seed_for("acc7b-s", i));
    const PureState rho = sampler.sample();
    const ModuleElement xi = random_module_element(kModule, seed_for("acc7b-xi", i));
    const Section psi = Section::constant(xi);
    const Chart center(rho.block(), rho.vector());
    const Vector y = sampler.sample_tangent(center);
    const Vector z = sampler.sample_tangent(center);
    if (!y.isZero() && !z.isZero()) {
      worst_flat = std::max(worst_flat, flatness_check(psi, rho, y, z));
    }
    worst_holo = std::max(worst_holo, holomorphy_check(psi, rho));
    if (!y.isZero()) {
      const AlgebraElement a = random_hermitian(kShape, seed_for("acc7b-a", i));
      const StateFunction fa = StateFunction::gelfand(a);
      const Vector lhs =
          covariant_derivative(psi * fa, rho, y, DerivMode::finite_difference).value;
      const Vector rhs =
          gelfand_chart_derivative(a, center, Vector::Zero(rho.dim()), y,
                                   Wirtinger::holomorphic) *
              psi(rho).value +
          fa(rho) * covariant_derivative(psi, rho, y, DerivMode::analytic).value;
      worst_leibniz = std::max(worst_leibniz, (lhs - rhs).norm());
    }
  }
  line.note("flatness", worst_flat, 1e-4);
  line.note("leibniz", worst_leibniz, 1e-5);
  line.note("holomorphy", worst_holo, 1e-5);
  return line;
}

Line reconstruction_roundtrip() {
  Line line;
  const AlgebraShape shape({2, 3, 4});
  double worst = 0.0;
  for (std::uint64_t round = 0; round < 10; ++round) {
    const AlgebraElement target = random_hermitian(shape, seed_for("acc8-re", round)) +
                                  kI * random_hermitian(shape, seed_for("acc8-im", round));
    std::vector<std::pair<PureState, Complex>> samples;
    for (BlockId k : spectrum(shape)) {
      const int n = shape.dim(k);
      auto push = [&](const Vector& v) {
        const PureState rho(k, v);
        samples.emplace_back(rho, evaluate(rho, target));
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
    worst = std::max(worst, std::max(distance(rec.element, target), rec.residual));
  }
  line.note("round trip", worst, 1e-8);
  return line;
}

Line determinism() {
  Line line;
  const RunConfig config;  // blocks [2,3], rows [3,1], seed 42, 200 samples
  auto canonical = [](const RunReport& report) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(report.to_json());
    for (auto& entry : doc["suites"]) entry["elapsed"] = 0;
    return doc.dump();
  };
  const RunReport first = run_suites(config);
  const RunReport second = run_suites(config);
  line.require("reports byte-identical modulo timing",
               canonical(first) == canonical(second));
  line.require("default config passes", first.pass && second.pass);
  return line;
}

}  // namespace

int main() {
  const auto started = std::chrono::steady_clock::now();
  struct Entry {
    const char* name;
    Line (*run)();
  };
  const Entry entries[] = {
      {"star homomorphism", star_homomorphism},
      {"norm recovery", norm_recovery},
      {"second-order membership", membership},
      {"serre-swan action", serre_swan},
      {"metric compatibility", metric_compatibility},
      {"bundle structure", bundle_structure},
      {"connection laws", connection_laws},
      {"reconstruction", reconstruction_roundtrip},
      {"determinism", determinism},
  };
  bool all = true;
  int id = 0;
  for (const Entry& entry : entries) {
    const Line line = entry.run();
    ++id;
    std::printf("criterion %d %-24s %-86s %s\n", id, entry.name, line.detail.c_str(),
                line.pass ? "pass" : "FAIL");
    all = all && line.pass;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  std::printf("acceptance: %s (%.1f s)\n", all ? "pass" : "FAIL",
              static_cast<double>(elapsed.count()) / 1000.0);
  return all ? 0 : 1;
}
