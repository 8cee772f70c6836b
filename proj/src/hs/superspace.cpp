#include "shs/hs/superspace.hpp"

#include "shs/cas/variational.hpp"
#include "shs/hs/algebra.hpp"
#include "shs/hs/fields.hpp"
#include "shs/hs/system.hpp"

namespace shs::hs {

using cas::Rational;
using cas::superD;
using cas::SymExpr;
using namespace fields;

SymExpr superfield_U() { return jet(u) + SymExpr::theta() * jet(xi, 1); }

SymExpr superfield_M() { return -superD(superfield_U(), 3); }

SymExpr superspace_rhs(const SymExpr& U) {
  return U * superD(U, 5) + Rational(1, 2) * (superD(U) * superD(U, 4)) +
         Rational(3, 2) * (superD(U, 2) * superD(U, 3));
}

cas::SuperfieldExpr superspace_system() {
  return cas::theta_expand(cas::dt(superfield_M()) - superspace_rhs(superfield_U()));
}

CheckResult superspace_check() {
  CheckResult r{"superspace", {}, {}};
  const EvolutionSystem sys = reference_system();
  const cas::SuperfieldExpr M = cas::theta_expand(superfield_M());
  r.expect_zero("body of M is -phi_x", M.body + jet(xi, 2));
  r.expect_zero("soul of M is m", M.soul + jet(u, 2));

  const cas::SuperfieldExpr eq = superspace_system();
  r.expect_zero("theta component is the m equation", eq.soul - residual_u(sys));
  r.expect_zero("body is the eta equation", eq.body - residual_xi(sys));

  const AlgebraElement X{jet(u), jet(phi)};
  const AlgebraElement Y{jet(v), jet(psi)};
  const cas::SuperfieldExpr sb = cas::theta_expand(super_bracket(superfield(X), superfield(Y)));
  const AlgebraElement cb = lie_bracket(X, Y);
  r.expect_zero("superfield bracket, body", sb.body - cb.even_part);
  r.expect_zero("superfield bracket, theta component", sb.soul - cb.odd_part);
  r.expect_true("Berezin form of the metric",
                cas::equals_mod_dx(super_inner_product(superfield(X), superfield(Y)).over_x().integrand,
                                   inner_product(X, Y).integrand));

  const SymExpr U = superfield_U();
  const SymExpr wrong = U * superD(U, 5) + Rational(1, 2) * (superD(U) * superD(U, 4)) + superD(U, 2) * superD(U, 3);
  const cas::SuperfieldExpr bad = cas::theta_expand(cas::dt(superfield_M()) - wrong);
  r.expect_nonzero("control: coefficient 1 instead of 3/2", bad.soul - residual_u(sys));
  return r;
}

namespace {

SymExpr susy_variation(const SymExpr& residual, const SymExpr& delta_u, const SymExpr& delta_xi) {
  cas::RuleSet shift;
  shift.add({u, 0, 0, 0}, jet(u) + delta_u);
  shift.add({xi, 0, 0, 0}, jet(xi) + delta_xi);
  // tau^2 = 0, so the substituted residual is exactly R + first variation.
  return cas::substitute(residual, shift) - residual;
}

}  // namespace

CheckResult susy_invariance_check() {
  CheckResult r{"susy", {}, {}};
  const EvolutionSystem sys = reference_system();
  const cas::RuleSet motion = sys.motion_rules();
  const SymExpr t = jet(tau);
  const SymExpr du = t * jet(xi, 1);
  const SymExpr dxi = t * jet(u);
  const SymExpr var_u = susy_variation(residual_u(sys), du, dxi);
  const SymExpr var_xi = susy_variation(residual_xi(sys), du, dxi);
  r.expect_nonzero("variation of the m equation is nontrivial off shell", var_u);
  r.expect_zero("variation of the m equation on solutions", cas::reduce(var_u, motion));
  r.expect_zero("variation of the eta equation on solutions", cas::reduce(var_xi, motion));

  const SymExpr bad_dxi = t * jet(u, 1);
  r.expect_nonzero("control: dxi = tau u_x",
                   cas::reduce(susy_variation(residual_u(sys), du, bad_dxi), motion) +
                       cas::reduce(susy_variation(residual_xi(sys), du, bad_dxi), motion));
  return r;
}

}  // namespace shs::hs
