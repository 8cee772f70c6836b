#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "shs/cas/variational.hpp"
#include "shs/hs/fields.hpp"
#include "shs/hs/hamiltonian.hpp"
#include "shs/num/config.hpp"
#include "shs/num/cross_check.hpp"
#include "shs/num/evaluate.hpp"
#include "shs/num/solver.hpp"

using namespace shs::num;
using shs::GrassmannElement;
using Catch::Matchers::WithinAbs;

namespace {

constexpr shs::GeneratorSet e1 = 1, e2 = 2, e12 = 3;

SolverConfig bosonic_config() {
  SolverConfig cfg;
  cfg.n_grassmann = 0;
  return cfg;
}

InitialData cos_x() {
  InitialData d;
  d.u = {{0, {{1, 1.0, 0.0}}}};
  return d;
}

InitialData mixed() {
  InitialData d = cos_x();
  d.xi = {{e1, {{1, 0.1, 0.0}}}, {e2, {{1, 0.0, 0.1}}}};
  return d;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Hand-expanded four-component form on Lambda_2 with u = u0 + u12 e1e2,
// xi = x1 e1 + x2 e2:
//   u0_tx  = -(u0 u0_xx + 1/2 u0_x^2) - a0
//   u12_tx = -(u0 u12_xx + u12 u0_xx + u0_x u12_x + 1/2 (x1_x x2_xx - x2_x x1_xx)) - a12
//   xi_tx  = -(u0 xi_xx + 1/2 u0_x xi_x) - b_i
struct FourComponents {
  std::vector<double> u0, u12, x1, x2;
};

FourComponents four_rate(const FourComponents& s, Spectral& sp) {
  const auto u0 = sp.derivatives(s.u0, 2), u12 = sp.derivatives(s.u12, 2);
  const auto x1 = sp.derivatives(s.x1, 2), x2 = sp.derivatives(s.x2, 2);
  const int n = sp.size();
  FourComponents r{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    r.u0[i] = -(u0[0][i] * u0[2][i] + 0.5 * u0[1][i] * u0[1][i]);
    r.u12[i] = -(u0[0][i] * u12[2][i] + u12[0][i] * u0[2][i] + u0[1][i] * u12[1][i] +
                 0.5 * (x1[1][i] * x2[2][i] - x2[1][i] * x1[2][i]));
    r.x1[i] = -(u0[0][i] * x1[2][i] + 0.5 * u0[1][i] * x1[1][i]);
    r.x2[i] = -(u0[0][i] * x2[2][i] + 0.5 * u0[1][i] * x2[1][i]);
  }
  for (auto* f : {&r.u0, &r.u12, &r.x1, &r.x2}) {
    const double m = Spectral::mean(*f);
    for (double& v : *f) v -= m;
    *f = sp.antiderivative(*f);
  }
  return r;
}

FourComponents four_axpy(const FourComponents& s, double c, const FourComponents& k) {
  FourComponents out = s;
  auto add = [c](std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
  };
  add(out.u0, k.u0);
  add(out.u12, k.u12);
  add(out.x1, k.x1);
  add(out.x2, k.x2);
  return out;
}

GridState evolve_to(GridState s, double t_end, double dt, const SolverConfig& cfg) {
  Spectral sp(cfg.n_modes);
  const int steps = static_cast<int>(std::lround(t_end / dt));
  for (int i = 0; i < steps; ++i) s = step(s, dt, sp, cfg);
  return s;
}

}  // namespace

TEST_CASE("zero state is a fixed point") {
  SolverConfig cfg;
  Spectral sp(cfg.n_modes);
  const GridState zero = GridState::zero(cfg.n_modes, 2);
  const GridState rate = rhs_once_integrated(zero, sp);
  CHECK(rate.max_abs() == 0);
  CHECK(step(zero, 1e-3, sp, cfg).max_abs() == 0);
}

TEST_CASE("initial u_t for cos x") {
  const SolverConfig cfg = bosonic_config();
  Spectral sp(cfg.n_modes);
  const GridState rate = rhs_once_integrated(cos_x().sample(cfg), sp);
  for (int i = 0; i < cfg.n_modes; ++i)
    CHECK_THAT(rate.u.at(0)[i], WithinAbs(0.375 * std::sin(2 * grid_point(i, cfg.n_modes)), 1e-12));
  const RhsParts parts = rhs_parts(cos_x().sample(cfg), sp, true);
  CHECK_THAT(parts.a.body(), WithinAbs(0.25, 1e-14));
}

TEST_CASE("a lone fermion does not move") {
  SolverConfig cfg;
  Spectral sp(cfg.n_modes);
  InitialData d;
  d.xi = {{e1, {{1, 0.5, 0.0}}}};
  const GridState rate = rhs_once_integrated(d.sample(cfg), sp);
  CHECK(rate.max_abs() == 0);
}

TEST_CASE("one step matches the Taylor expansion") {
  const SolverConfig cfg = bosonic_config();
  Spectral sp(cfg.n_modes);
  const double dt = 1e-3;
  const GridState next = step(cos_x().sample(cfg), dt, sp, cfg);
  for (int i = 0; i < cfg.n_modes; ++i) {
    const double x = grid_point(i, cfg.n_modes);
    // u_tt(0) = -(7/16) cos 3x - (9/16) cos x
    const double expected =
        std::cos(x) + dt * 0.375 * std::sin(2 * x) + 0.5 * dt * dt * (-7.0 / 16 * std::cos(3 * x) - 9.0 / 16 * std::cos(x));
    CHECK_THAT(next.u.at(0)[i], WithinAbs(expected, 1e-9));
  }
}

TEST_CASE("fourth-order convergence in time") {
  const SolverConfig cfg = bosonic_config();
  const GridState s0 = cos_x().sample(cfg);
  const GridState a = evolve_to(s0, 0.5, 0.1, cfg);
  const GridState b = evolve_to(s0, 0.5, 0.05, cfg);
  const GridState c = evolve_to(s0, 0.5, 0.025, cfg);
  const double ratio = max_diff(a.u.at(0), b.u.at(0)) / max_diff(b.u.at(0), c.u.at(0));
  CHECK(ratio > 14);
  CHECK(ratio < 18);
}

TEST_CASE("bosonic Hamiltonians are conserved") {
  SolverConfig cfg = bosonic_config();
  InitialData d;
  d.u = {{0, {{1, 1.0, 0.0}, {2, 0.5, 0.0}}}};
  const Trajectory tr = evolve(d.sample(cfg), cfg);
  REQUIRE_FALSE(tr.blew_up);
  CHECK(std::abs(tr.series.front().H2.body()) > 0.1);
  CHECK(max_drift(tr.series, 0, false) < 1e-8);
  CHECK(max_drift(tr.series, 0, true) < 1e-7);
}

TEST_CASE("Lambda_2 run agrees with the hand-expanded component system") {
  SolverConfig cfg;
  cfg.n_modes = 128;
  const double dt = 1e-3, t_end = 0.2;
  const GridState s0 = mixed().sample(cfg);
  const GridState end = evolve_to(s0, t_end, dt, cfg);

  Spectral sp(cfg.n_modes);
  FourComponents f{s0.u.at(0), s0.u.at(e12), s0.xi.at(e1), s0.xi.at(e2)};
  cfg.dealias = false;
  const GridState end_plain = evolve_to(s0, t_end, dt, cfg);
  for (int i = 0; i < static_cast<int>(std::lround(t_end / dt)); ++i) {
    const FourComponents k1 = four_rate(f, sp);
    const FourComponents k2 = four_rate(four_axpy(f, dt / 2, k1), sp);
    const FourComponents k3 = four_rate(four_axpy(f, dt / 2, k2), sp);
    const FourComponents k4 = four_rate(four_axpy(f, dt, k3), sp);
    f = four_axpy(four_axpy(four_axpy(four_axpy(f, dt / 6, k1), dt / 3, k2), dt / 3, k3), dt / 6, k4);
  }
  CHECK(max_diff(end_plain.u.at(0), f.u0) < 1e-12);
  CHECK(max_diff(end_plain.u.at(e12), f.u12) < 1e-12);
  CHECK(max_diff(end_plain.xi.at(e1), f.x1) < 1e-12);
  CHECK(max_diff(end_plain.xi.at(e2), f.x2) < 1e-12);
  // The soul of u is excited by the fermion pair.
  CHECK(*std::max_element(end.u.at(e12).begin(), end.u.at(e12).end()) > 1e-5);
}

TEST_CASE("gauge constants make the once-integrated sides mean-free") {
  SolverConfig cfg;
  Spectral sp(cfg.n_modes);
  InitialData d = mixed();
  d.u.push_back({e12, {{2, 0.3, 0.1}}});
  const RhsParts parts = rhs_parts(d.sample(cfg), sp, true);
  for (const auto& [level, v] : parts.u_tx) CHECK(std::abs(Spectral::mean(v)) <= 1e-13);
  for (const auto& [level, v] : parts.xi_tx) CHECK(std::abs(Spectral::mean(v)) <= 1e-13);
  CHECK(shs::parity_of(parts.a) == "even");
  CHECK(shs::parity_of(parts.b) == "odd");
}

TEST_CASE("fermion-free data reproduce the purely bosonic run") {
  SolverConfig cfg;
  cfg.t_end = 0.3;
  const Trajectory with = evolve(cos_x().sample(cfg), cfg);
  const SolverConfig bos = [&] {
    SolverConfig c = cfg;
    c.n_grassmann = 0;
    return c;
  }();
  const Trajectory without = evolve(cos_x().sample(bos), bos);
  CHECK(max_diff(with.final_state.u.at(0), without.final_state.u.at(0)) == 0);
  CHECK(with.final_state.u.at(e12) == std::vector<double>(cfg.n_modes, 0.0));
}

TEST_CASE("fermionic Hamiltonian levels are conserved") {
  SolverConfig cfg;
  cfg.t_end = 0.5;
  const Trajectory tr = evolve(mixed().sample(cfg), cfg);
  for (shs::GeneratorSet level : {shs::GeneratorSet{0}, e12}) {
    CHECK(max_drift(tr.series, level, false) < 1e-7);
    CHECK(max_drift(tr.series, level, true) < 1e-7);
  }
  CHECK(std::abs(tr.series.front().H1.coeff(e12)) > 1e-3);
  for (const auto& c : tr.series) {
    CHECK(c.H1.coeff(e1) == 0);
    CHECK(c.H2.coeff(e2) == 0);
  }
}

TEST_CASE("variational derivative matches a finite-difference gradient") {
  using namespace shs::hs::fields;
  const int n = 64;
  Spectral sp(n);
  std::vector<double> base(n), dir(n);
  for (int i = 0; i < n; ++i) {
    const double x = grid_point(i, n);
    base[i] = std::cos(x) + 0.3 * std::sin(2 * x);
    dir[i] = 0.7 * std::sin(x) - 0.2 * std::cos(3 * x);
  }
  const shs::cas::SymExpr density = shs::cas::define(shs::hs::h2_density().integrand, xi, {});
  const shs::cas::SymExpr grad = shs::cas::variational_derivative({density}, u);
  auto functional = [&](const std::vector<double>& f) {
    const auto d = sp.derivatives(f, 3);
    double total = 0;
    for (int i = 0; i < n; ++i)
      total += evaluate(density, 0, [&](const shs::cas::JetFactor& j) {
                 return GrassmannElement::scalar(0, d[j.dx][i]);
               }).body();
    return total * sp.spacing();
  };
  const double eps = 1e-5;
  std::vector<double> plus = base, minus = base;
  for (int i = 0; i < n; ++i) {
    plus[i] += eps * dir[i];
    minus[i] -= eps * dir[i];
  }
  const double fd = (functional(plus) - functional(minus)) / (2 * eps);
  const auto d = sp.derivatives(base, 3);
  double pairing = 0;
  for (int i = 0; i < n; ++i)
    pairing += evaluate(grad, 0, [&](const shs::cas::JetFactor& j) { return GrassmannElement::scalar(0, d[j.dx][i]); })
                   .body() *
               dir[i];
  pairing *= sp.spacing();
  CHECK_THAT(fd, WithinAbs(pairing, 1e-8));
}

TEST_CASE("symbolic and numeric right-hand sides agree") { CHECK(symbolic_numeric_mismatch(100) < 1e-10); }

TEST_CASE("evaluate rejects theta and respects anticommutation") {
  using namespace shs::hs::fields;
  CHECK_THROWS_AS(evaluate(shs::cas::SymExpr::theta(), 2, [](const shs::cas::JetFactor&) { return GrassmannElement(2); }),
                  std::invalid_argument);
  const shs::cas::SymExpr e = jet(xi) * jet(xi, 1);
  const GrassmannElement v = evaluate(e, 2, [](const shs::cas::JetFactor& j) {
    return j.dx == 0 ? GrassmannElement::generator(2, 1) : GrassmannElement::generator(2, 2);
  });
  CHECK(v.coeff(e12) == 1.0);
}

TEST_CASE("residual check") {
  SolverConfig cfg;
  cfg.n_modes = 64;
  std::vector<GridState> zeros(5, GridState::zero(cfg.n_modes, 2));
  for (int i = 0; i < 5; ++i) zeros[i].time = 0.1 * i;
  CHECK(residual_check(zeros) == 0);

  cfg.t_end = 0.2;
  const Trajectory tr = evolve(mixed().sample(cfg), cfg);
  const double clean = residual_check(tr.samples);
  CHECK(clean < 1e-5);
  std::vector<GridState> corrupted = tr.samples;
  corrupted[corrupted.size() / 2].u.at(0)[7] += 1e-3;
  CHECK(residual_check(corrupted) > 100 * clean);

  std::vector<GridState> uneven = tr.samples;
  uneven[1].time += 1e-3;
  CHECK_THROWS_AS(residual_check(uneven), std::invalid_argument);
  CHECK_THROWS_AS(residual_check({tr.samples[0], tr.samples[1]}), std::invalid_argument);
}

TEST_CASE("residual decreases under refinement") {
  auto run = [](int n, double dt) {
    SolverConfig cfg;
    cfg.n_modes = n;
    cfg.dt = dt;
    cfg.t_end = 0.5;
    return residual_check(evolve(mixed().sample(cfg), cfg).samples);
  };
  CHECK(run(256, 1e-3) / run(512, 5e-4) >= 4);
}

TEST_CASE("huge time steps are reported as blow-up") {
  SolverConfig cfg = bosonic_config();
  cfg.dt = 5.0;
  cfg.t_end = 100;
  InitialData d;
  d.u = {{0, {{1, 3.0, 0.0}, {5, 0.0, 2.0}}}};
  const Trajectory tr = evolve(d.sample(cfg), cfg);
  CHECK(tr.blew_up);
  CHECK_FALSE(tr.diagnostic.empty());
  CHECK_FALSE(tr.warnings.empty());
}

TEST_CASE("configuration parsing") {
  const nlohmann::json j = {{"n_modes", 64},
                            {"dt", 0.01},
                            {"t_end", 0.1},
                            {"n_grassmann", 2},
                            {"initial",
                             {{"u", {{{"level", "1"}, {"modes", {{{"k", 1}, {"cos", 1.0}}}}}}},
                              {"xi", {{{"level", "e2"}, {"modes", {{{"k", 2}, {"sin", 0.5}}}}}}}}}};
  const SimulationSpec spec = parse_simulation(j);
  CHECK(spec.solver.n_modes == 64);
  CHECK(spec.initial.xi.front().level == e2);
  const SimulationSpec again = parse_simulation(to_json(spec));
  CHECK(to_json(again) == to_json(spec));

  CHECK(parse_level("1") == 0);
  CHECK(parse_level("e1e2") == e12);
  CHECK_THROWS_AS(parse_level("e2e1"), ConfigError);
  CHECK_THROWS_AS(parse_level("x"), ConfigError);

  auto bad = j;
  bad["n_modes"] = 100;
  CHECK_THROWS_AS(parse_simulation(bad), ConfigError);
  bad = j;
  bad["dt"] = -1;
  CHECK_THROWS_AS(parse_simulation(bad), ConfigError);
  bad = j;
  bad["initial"]["xi"][0]["level"] = "e1e2";
  CHECK_THROWS_AS(parse_simulation(bad), ConfigError);
  bad = j;
  bad["initial"]["u"][0]["level"] = "e1e3";
  CHECK_THROWS_AS(parse_simulation(bad), ConfigError);
  bad = j;
  bad["initial"]["u"][0]["modes"][0]["k"] = "one";
  CHECK_THROWS_AS(parse_simulation(bad), ConfigError);
}
