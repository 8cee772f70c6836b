#include "shs/hs/lax.hpp"

#include "shs/cas/variational.hpp"
#include "shs/hs/fields.hpp"
#include "shs/hs/superspace.hpp"

namespace shs::hs {

using cas::dx;
using cas::Rational;
using cas::superD;
using cas::SymExpr;
using namespace fields;

namespace {

const Rational kHalf(1, 2);

SymExpr theta() { return SymExpr::theta(); }
SymExpr lambda(int p = 1) { return SymExpr::lambda(p); }

void require(const SymExpr& e, Parity p, const char* what) {
  const auto actual = e.parity();
  if (!e.is_zero() && (!actual || *actual != p))
    throw cas::ParityError(std::string(what) + " must be " + std::string(to_string(p)));
}

SymExpr full(const cas::SuperfieldExpr& s) { return s.reconstruct(); }

}  // namespace

void LaxAnsatz::validate() const {
  require(full(A), Parity::even, "A");
  require(full(B), Parity::odd, "B");
  require(full(C), Parity::even, "C");
}

LaxAnsatz standard_lax_ansatz() {
  const SymExpr U = superfield_U();
  return {cas::theta_expand(kHalf * dx(U)), cas::theta_expand(-kHalf * superD(U)),
          cas::theta_expand(lambda() - U)};
}

LaxAnsatz trivial_lax_ansatz() { return {{}, {}, {lambda(), {}}}; }

LaxAnsatz generic_lax_ansatz() {
  return {{jet(cas::even_field("Ab")), jet(cas::odd_field("As"))},
          {jet(cas::odd_field("Bb")), jet(cas::even_field("Bs"))},
          {jet(cas::even_field("Cb")), jet(cas::odd_field("Cs"))}};
}

SymExpr eigen_superfield() { return jet(g) + theta() * jet(nu); }

cas::RuleSet lax_x_rules() {
  // D^3 G = nu_x + theta g_xx.
  const cas::SuperfieldExpr rhs = cas::theta_expand(kHalf * lambda(-1) * superfield_M() * eigen_superfield());
  cas::RuleSet rules;
  rules.add({nu, 1, 0, 0}, rhs.body);
  rules.add({g, 2, 0, 0}, rhs.soul);
  return rules;
}

LaxResiduals lax_compatibility(const LaxAnsatz& ansatz) {
  ansatz.validate();
  const SymExpr G = eigen_superfield();
  const cas::RuleSet x_rules = lax_x_rules();
  const SymExpr t_part =
      cas::reduce(full(ansatz.A) * G + full(ansatz.B) * superD(G) + full(ansatz.C) * dx(G), x_rules);
  const cas::SuperfieldExpr t_comp = cas::theta_expand(t_part);
  cas::RuleSet rules = x_rules;
  rules.add({g, 0, 1, 0}, t_comp.body);
  rules.add({nu, 0, 1, 0}, t_comp.soul);

  const SymExpr lhs = cas::dt(kHalf * lambda(-1) * superfield_M() * G);
  const SymExpr rhs = superD(t_part, 3);
  const cas::SuperfieldExpr res = cas::theta_expand(cas::reduce(lhs - rhs, rules));

  const cas::JetFactor jg{g, 0, 0, 0};
  const cas::JetFactor jgx{g, 1, 0, 0};
  const cas::JetFactor jnu{nu, 0, 0, 0};
  auto split = [&](const SymExpr& part, SymExpr& c_g, SymExpr& c_nu, SymExpr& c_gx) {
    c_g = cas::partial(part, jg);
    c_nu = cas::partial(part, jnu);
    c_gx = cas::partial(part, jgx);
    return part - (c_g * jet(g) + c_nu * jet(nu) + c_gx * jet(g, 1));
  };

  SymExpr e1, e2, e3;
  SymExpr stray = split(res.body, e1, e2, e3);
  // The theta-free coefficients also produce theta terms through DG and G_x.
  const SymExpr lead = cas::theta_expand(cas::reduce(e1 * G + e2 * superD(G) + e3 * dx(G), x_rules)).soul;
  SymExpr f1, f2, f3;
  stray += split(res.soul - lead, f1, f2, f3);
  for (const SymExpr* c : {&e1, &e2, &e3, &f1, &f2, &f3})
    if (c->contains(g) || c->contains(nu)) stray += *c;
  return {e1 + theta() * f1, e2 + theta() * f2, e3 + theta() * f3, stray};
}

LaxEquations lax_equations(const LaxAnsatz& ansatz) {
  const SymExpr A = full(ansatz.A);
  const SymExpr B = full(ansatz.B);
  const SymExpr C = full(ansatz.C);
  const SymExpr M = superfield_M();
  const SymExpr DM = superD(M);
  SymExpr eq_g = cas::dt(M) - (2 * lambda() * superD(dx(A)) + superD(B) * M + superD(C) * DM + dx(C) * M -
                               B * DM + C * dx(M));
  SymExpr eq_dg = superD(dx(B)) - kHalf * lambda(-1) * superD(C) * M + dx(A) + lambda(-1) * B * M;
  SymExpr eq_gx = superD(dx(C)) + superD(A) - dx(B);
  return {std::move(eq_g), std::move(eq_dg), std::move(eq_gx)};
}

}  // namespace shs::hs

namespace shs::hs {

CheckResult lax_check() {
  CheckResult r{"lax", {}, {}};
  const cas::RuleSet x_rules = lax_x_rules();
  const SymExpr m = -jet(u, 2);
  const SymExpr phi_x = jet(xi, 2);
  r.expect_zero("component x-part, nu_x",
                *x_rules.rewrite({nu, 1, 0, 0}) + kHalf * lambda(-1) * phi_x * jet(g));
  r.expect_zero("component x-part, g_xx",
                *x_rules.rewrite({g, 2, 0, 0}) - kHalf * lambda(-1) * (m * jet(g) + phi_x * jet(nu)));
  r.expect_zero("x-part without fermions is y_xx = m y / (2 lambda)",
                cas::define(*x_rules.rewrite({g, 2, 0, 0}), xi, {}) - kHalf * lambda(-1) * m * jet(g));

  // For free A, B, C the coefficients are the three customary equations up to
  // constant factors: 2 lambda E_G = eq_G, E_DG = -eq_DG, E_Gx = -eq_Gx.
  const LaxAnsatz generic = generic_lax_ansatz();
  const LaxResiduals gr = lax_compatibility(generic);
  const LaxEquations ge = lax_equations(generic);
  r.expect_zero("generic ansatz stays in the basis", gr.outside_basis);
  r.expect_zero("generic ansatz, coefficient of G", 2 * lambda() * gr.coeff_G - ge.eq_G);
  r.expect_zero("generic ansatz, coefficient of DG", gr.coeff_DG + ge.eq_DG);
  r.expect_zero("generic ansatz, coefficient of G_x", gr.coeff_Gx + ge.eq_Gx);

  const cas::SuperfieldExpr super_eq = superspace_system();
  const LaxResiduals sr = lax_compatibility(standard_lax_ansatz());
  const LaxEquations se = lax_equations(standard_lax_ansatz());
  r.expect_zero("standard ansatz stays in the basis", sr.outside_basis);
  r.expect_zero("standard ansatz, DG equation", sr.coeff_DG);
  r.expect_zero("standard ansatz, G_x equation", sr.coeff_Gx);
  r.expect_zero("standard ansatz, G equation is the superspace system",
                2 * lambda() * sr.coeff_G - super_eq.reconstruct());
  r.expect_zero("standard ansatz, customary G equation", se.eq_G - super_eq.reconstruct());

  const LaxResiduals tr = lax_compatibility(trivial_lax_ansatz());
  r.expect_nonzero("control: A = B = 0, C = lambda", 2 * lambda() * tr.coeff_G - super_eq.reconstruct());
  return r;
}

namespace {

// (m dx + dx m)(y^2) - lambda dx^3(y^2) reduced with y_xx = factor m y.
SymExpr bosonic_eigen_residual(const SymExpr& factor) {
  const SymExpr m = -jet(u, 2);
  const SymExpr y2 = jet(y) * jet(y);
  cas::RuleSet rules;
  rules.add({y, 2, 0, 0}, factor * m * jet(y));
  return cas::reduce(m * dx(y2) + dx(m * y2) - lambda() * dx(y2, 3), rules);
}

// -K1(F) - lambda D^5 F with F = G^2, K1 F = -1/2 [M F_x + 2 (M F)_x + (DM)(DF)].
SymExpr super_eigen_residual(const cas::RuleSet& x_rules) {
  const SymExpr G = eigen_superfield();
  const SymExpr F = G * G;
  const SymExpr M = superfield_M();
  const SymExpr k1 = -kHalf * (M * dx(F) + 2 * dx(M * F) + superD(M) * superD(F));
  return cas::reduce(-k1 - lambda() * superD(F, 5), x_rules);
}

}  // namespace

CheckResult recursion_eigen_check() {
  CheckResult r{"recursion", {}, {}};
  r.expect_zero("bosonic squared eigenfunction", bosonic_eigen_residual(kHalf * lambda(-1)));
  r.expect_nonzero("control: bosonic y_xx = m y / lambda", bosonic_eigen_residual(lambda(-1)));
  r.expect_zero("super squared eigenfunction", super_eigen_residual(lax_x_rules()));
  const cas::SuperfieldExpr wrong = cas::theta_expand(lambda(-1) * superfield_M() * eigen_superfield());
  cas::RuleSet wrong_rules;
  wrong_rules.add({nu, 1, 0, 0}, wrong.body);
  wrong_rules.add({g, 2, 0, 0}, wrong.soul);
  r.expect_nonzero("control: super D^3 G = M G / lambda", super_eigen_residual(wrong_rules));
  return r;
}

}  // namespace shs::hs
