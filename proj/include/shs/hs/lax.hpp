#pragma once

#include "shs/cas/calculus.hpp"
#include "shs/hs/check_result.hpp"

namespace shs::hs {

/// t-part G_t = A G + B DG + C G_x of a candidate Lax pair whose x-part is
/// D^3 G = M G / (2 lambda). A, C even, B odd; Laurent polynomials in lambda.
struct LaxAnsatz {
  cas::SuperfieldExpr A;
  cas::SuperfieldExpr B;
  cas::SuperfieldExpr C;

  /// Throws cas::ParityError on a parity mismatch.
  void validate() const;
};

/// A = 1/2 U_x, B = -1/2 DU, C = lambda - U.
LaxAnsatz standard_lax_ansatz();
/// A = B = 0, C = lambda.
LaxAnsatz trivial_lax_ansatz();
/// A, B, C built from free component fields, for identifying the
/// coefficient equations in general.
LaxAnsatz generic_lax_ansatz();

/// G = g + theta nu.
cas::SymExpr eigen_superfield();
/// nu_x and g_xx eliminated through the theta components of D^3 G = M G / (2 lambda).
cas::RuleSet lax_x_rules();

/// Coefficients of G, DG and G_x (each a superfield written with theta) in
///   (M G / 2 lambda)_t - D^3 (A G + B DG + C G_x)
/// after G_t, D^3 G and their consequences have been eliminated.
struct LaxResiduals {
  cas::SymExpr coeff_G;
  cas::SymExpr coeff_DG;
  cas::SymExpr coeff_Gx;
  /// Terms not linear in {g, g_x, nu}; zero for a consistent ansatz.
  cas::SymExpr outside_basis;
};

LaxResiduals lax_compatibility(const LaxAnsatz& ansatz);

/// The three coefficient equations in the customary scaling, written as
/// expressions that vanish:
///   M_t - [2 lambda (D A_x) + (DB) M + (DC)(DM) + C_x M - B (DM) + C M_x]
///   D B_x - (DC) M / (2 lambda) + A_x + B M / lambda
///   D C_x + D A - B_x
struct LaxEquations {
  cas::SymExpr eq_G;
  cas::SymExpr eq_DG;
  cas::SymExpr eq_Gx;
};
LaxEquations lax_equations(const LaxAnsatz& ansatz);

CheckResult lax_check();
/// Squared-eigenfunction relations: bosonic (m dx + dx m)(y^2) = lambda dx^3(y^2)
/// under y_xx = m y / (2 lambda), and -K1(G^2) = lambda D^5(G^2) under the
/// super x-part.
CheckResult recursion_eigen_check();

}  // namespace shs::hs
