#include "shs/hs/system.hpp"

#include "shs/hs/algebra.hpp"
#include "shs/hs/fields.hpp"

namespace shs::hs {

using cas::Rational;
using cas::SymExpr;
using namespace fields;

namespace {
const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);
}  // namespace

cas::RuleSet EvolutionSystem::motion_rules() const {
  cas::RuleSet rules;
  rules.add({u, 2, 1, 0}, rhs_u_txx());
  rules.add({xi, 2, 1, 0}, rhs_xi_txx());
  return rules;
}

EvolutionSystem reference_system() {
  return {2 * jet(u, 1) * jet(u, 2) + jet(u) * jet(u, 3) + kHalf * (jet(xi, 1) * jet(xi, 3)),
          jet(u) * jet(xi, 3) + kThreeHalves * (jet(u, 1) * jet(xi, 2)) + kHalf * (jet(u, 2) * jet(xi, 1))};
}

EvolutionSystem geodesic_system() {
  const AlgebraElement U{jet(u), jet(phi)};
  auto [a0b0, a1b1] = bilinear_B(U, U);
  // m = A0 u and eta = A1 phi, so m_t and eta_t are the B images.
  return {cas::define(a0b0, phi, jet(xi, 1)), cas::define(a1b1, phi, jet(xi, 1))};
}

SymExpr once_integrated_u() {
  return -(jet(u) * jet(u, 2) + kHalf * (jet(u, 1) * jet(u, 1)) + kHalf * (jet(xi, 1) * jet(xi, 2)));
}

SymExpr once_integrated_xi() { return -(jet(u) * jet(xi, 2) + kHalf * (jet(u, 1) * jet(xi, 1))); }

cas::RuleSet once_integrated_rules() {
  cas::RuleSet rules;
  rules.add({u, 1, 1, 0}, once_integrated_u() - jet(a));
  rules.add({xi, 1, 1, 0}, once_integrated_xi() - jet(b));
  return rules;
}

SymExpr residual_u(const EvolutionSystem& s) { return -jet(u, 2, 1) - s.rhs_m; }
SymExpr residual_xi(const EvolutionSystem& s) { return -jet(xi, 2, 1) - s.rhs_eta; }

CheckResult geodesic_check() {
  CheckResult r{"geodesic", {}, {}};
  const EvolutionSystem geo = geodesic_system();
  const EvolutionSystem ref = reference_system();
  r.expect_zero("m_t from A0 B0(U,U)", geo.rhs_m - ref.rhs_m);
  r.expect_zero("eta_t from A1 B1(U,U)", geo.rhs_eta - ref.rhs_eta);
  const SymExpr hs_rhs = 2 * jet(u, 1) * jet(u, 2) + jet(u) * jet(u, 3);
  r.expect_zero("xi = 0 gives Hunter-Saxton", cas::define(geo.rhs_m, xi, {}) - hs_rhs);
  r.expect_zero("xi = 0 leaves no fermion equation", cas::define(geo.rhs_eta, xi, {}));
  // The once-integrated forms differentiate back to the system.
  r.expect_zero("dx of once-integrated u form", cas::dx(once_integrated_u()) - ref.rhs_u_txx());
  r.expect_zero("dx of once-integrated xi form", cas::dx(once_integrated_xi()) - ref.rhs_xi_txx());
  const SymExpr a0b0 = bilinear_B({jet(u), jet(phi)}, {jet(u), {}}).first;
  r.expect_nonzero("control: fermions dropped from the second slot",
                   cas::define(a0b0, phi, jet(xi, 1)) - ref.rhs_m);
  return r;
}

}  // namespace shs::hs
