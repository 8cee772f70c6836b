#include "shs/hs/hamiltonian.hpp"

#include "shs/hs/algebra.hpp"
#include "shs/hs/fields.hpp"
#include "shs/hs/system.hpp"

namespace shs::hs {

using cas::dx;
using cas::Rational;
using cas::SymExpr;
using namespace fields;

namespace {

const Rational kHalf(1, 2);

void require(const SymExpr& e, Parity p, const char* what) {
  const auto actual = e.parity();
  if (!e.is_zero() && (!actual || *actual != p))
    throw cas::ParityError(std::string(what) + " must be " + std::string(to_string(p)));
}

SymExpr m_expr() { return -jet(u, 2); }
SymExpr eta_expr() { return -jet(xi, 2); }

// J1 with the coefficient of the (dx eta) p_eta term as a parameter, so the
// check can build a perturbed operator.
std::pair<SymExpr, SymExpr> j1_with(const SymExpr& p_m, const SymExpr& p_eta, const Rational& c) {
  require(p_m, Parity::even, "first argument of J1");
  require(p_eta, Parity::odd, "second argument of J1");
  const SymExpr m = m_expr();
  const SymExpr eta = eta_expr();
  SymExpr row1 = -dx(m * p_m) - m * dx(p_m) + c * dx(eta * p_eta) + eta * dx(p_eta);
  SymExpr row2 = -dx(eta * p_m) - kHalf * (eta * dx(p_m)) - kHalf * (m * p_eta);
  return {std::move(row1), std::move(row2)};
}

}  // namespace

std::pair<SymExpr, SymExpr> apply_J1(const SymExpr& p_m, const SymExpr& p_eta) {
  return j1_with(p_m, p_eta, kHalf);
}

std::pair<SymExpr, SymExpr> apply_J2(const SymExpr& p_m, const SymExpr& p_eta) {
  require(p_m, Parity::even, "first argument of J2");
  require(p_eta, Parity::odd, "second argument of J2");
  return {dx(p_m, 3), dx(p_eta, 2)};
}

cas::Density h1_density() {
  return {kHalf * (jet(u, 1) * jet(u, 1) + jet(xi, 2) * jet(xi, 1)), cas::Measure::dx};
}

cas::Density h2_density() {
  return {kHalf * (jet(u) * jet(u, 1) * jet(u, 1) - jet(u) * jet(xi, 1) * jet(xi, 2)), cas::Measure::dx};
}

CheckResult biham_check() {
  CheckResult r{"biham", {}, {}};
  const EvolutionSystem sys = reference_system();

  // First leg: dH1/du = A0 u and dH1/dxi = A0 xi_x, hence dH1/dm = u, dH1/deta = xi_x.
  const SymExpr dh1_du = cas::variational_derivative(h1_density(), u);
  const SymExpr dh1_dxi = cas::variational_derivative(h1_density(), xi);
  r.expect_zero("dH1/du = A0 u", dh1_du - apply_A0(jet(u)));
  r.expect_zero("dH1/dxi = A0 xi_x", dh1_dxi - apply_A0(jet(xi, 1)));
  const auto [j1_m, j1_eta] = apply_J1(jet(u), jet(xi, 1));
  r.expect_zero("J1 leg, m_t", j1_m - sys.rhs_m);
  r.expect_zero("J1 leg, eta_t", j1_eta - sys.rhs_eta);

  // Second leg through J2 A0^{-1} = diag(-dx, -1).
  const SymExpr dh2_du = cas::variational_derivative(h2_density(), u);
  const SymExpr dh2_dxi = cas::variational_derivative(h2_density(), xi);
  r.expect_zero("dH2/du closed form",
                dh2_du + kHalf * (jet(u, 1) * jet(u, 1) + 2 * jet(u) * jet(u, 2) + jet(xi, 1) * jet(xi, 2)));
  r.expect_zero("dH2/dxi closed form",
                dh2_dxi + kHalf * (2 * jet(u) * jet(xi, 3) + 3 * jet(u, 1) * jet(xi, 2) + jet(u, 2) * jet(xi, 1)));
  r.expect_zero("J2 leg, m_t = -dx dH2/du", -dx(dh2_du) - sys.rhs_m);
  r.expect_zero("J2 leg, eta_t = -dH2/dxi", -dh2_dxi - sys.rhs_eta);

  // xi = 0: the Hunter-Saxton pair.
  const SymExpr hs_rhs = 2 * jet(u, 1) * jet(u, 2) + jet(u) * jet(u, 3);
  const SymExpr h2_bosonic = cas::define(h2_density().integrand, xi, {});
  r.expect_zero("bosonic J1 leg", apply_J1(jet(u), {}).first - hs_rhs);
  r.expect_zero("bosonic J2 leg", -dx(cas::variational_derivative({h2_bosonic}, u)) - hs_rhs);

  r.expect_nonzero("control: J1 with dx eta coefficient 1", j1_with(jet(u), jet(xi, 1), 1).first - sys.rhs_m);
  const cas::Density h2_flipped{kHalf * (jet(u) * jet(u, 1) * jet(u, 1) + jet(u) * jet(xi, 1) * jet(xi, 2))};
  r.expect_nonzero("control: H2 with fermion sign flipped",
                   -cas::variational_derivative(h2_flipped, xi) - sys.rhs_eta);
  r.notes.push_back("compatibility of J1 and J2 (pencil Jacobi identity) is not verified");
  return r;
}

CheckResult lagrangian_el_check() {
  CheckResult r{"lagrangian", {}, {}};
  const SymExpr lagrangian = jet(u, 0, 1) * jet(u, 1) - jet(xi, 0, 1) * jet(xi, 2) +
                             jet(u) * jet(u, 1) * jet(u, 1) - jet(u) * jet(xi, 1) * jet(xi, 2);
  const SymExpr e_u = cas::euler_lagrange(lagrangian, u);
  const SymExpr e_xi = cas::euler_lagrange(lagrangian, xi);
  const cas::RuleSet motion = reference_system().motion_rules();
  // E_u is an x-antiderivative of the m equation, so it vanishes after one
  // x-derivative, and equals 2a on the once-integrated flow.
  r.expect_zero("dx(E_u) on solutions", cas::reduce(dx(e_u), motion));
  r.expect_zero("E_u on the once-integrated flow", cas::reduce(e_u, once_integrated_rules()) - 2 * jet(a));
  r.expect_zero("E_xi on solutions", cas::reduce(e_xi, motion));
  r.expect_zero("E_xi is twice the xi residual", e_xi - 2 * residual_xi(reference_system()));

  cas::RuleSet frozen;
  frozen.add({u, 0, 1, 0}, {});
  frozen.add({xi, 0, 1, 0}, {});
  r.expect_nonzero("control: u_t = xi_t = 0", cas::reduce(e_u, frozen) + cas::reduce(e_xi, frozen));
  return r;
}

}  // namespace shs::hs
