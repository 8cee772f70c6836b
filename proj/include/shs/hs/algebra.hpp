#pragma once

#include <utility>

#include "shs/cas/variational.hpp"
#include "shs/hs/check_result.hpp"

namespace shs::hs {

/// Element (u, phi) of the superconformal algebra: a bosonic and a
/// fermionic component, both differential polynomials in x.
struct AlgebraElement {
  cas::SymExpr even_part;
  cas::SymExpr odd_part;

  /// Throws cas::ParityError unless even_part is even and odd_part odd.
  void validate() const;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);

/// [(u,phi),(v,psi)] = (u v_x - u_x v + 1/2 phi psi,
///                      u psi_x - 1/2 u_x psi - phi_x v + 1/2 phi v_x)
AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y);

/// <(u,phi),(v,psi)> = int (u_x v_x + phi_x psi) dx
cas::Density inner_product(const AlgebraElement& x, const AlgebraElement& y);
/// The same pairing written with A0 = -dx^2 and A1 = -dx: u A0 v + phi A1 psi.
cas::SymExpr inner_product_operator_form(const AlgebraElement& x, const AlgebraElement& y);

cas::SymExpr apply_A0(const cas::SymExpr& f);
cas::SymExpr apply_A1(const cas::SymExpr& f);

/// Images (A0 B0(X,Y), A1 B1(X,Y)) of the bilinear operator adjoint to the
/// bracket; B itself is never formed, so no inverse of A0 or A1 is needed.
std::pair<cas::SymExpr, cas::SymExpr> bilinear_B(const AlgebraElement& x, const AlgebraElement& y);

/// <X,[Y,Z]> - <B(X,Y), Z>, with the second pairing written through the
/// A-images: int (A0 B0) z + (A1 B1)-term. Exact iff B is the adjoint.
cas::SymExpr b_adjoint_residual(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);

/// Superspace forms with U = u + theta phi:
///   [U,V] = U D^2 V - V D^2 U + 1/2 (DU)(DV),   <U,V> = int dx dtheta (D^2 U)(DV)
cas::SymExpr superfield(const AlgebraElement& x);
cas::SymExpr super_bracket(const cas::SymExpr& U, const cas::SymExpr& V);
cas::Density super_inner_product(const cas::SymExpr& U, const cas::SymExpr& V);
/// V D^5 U + 1/2 (DV)(D^4 U) + 3/2 (D^2 V)(D^3 U), which equals -D^3 Bhat(U,V).
cas::SymExpr super_B_image(const cas::SymExpr& U, const cas::SymExpr& V);

/// Bracket properties, adjointness of B and the superspace forms on fixed
/// generic fields.
CheckResult bracket_check();
/// Jacobi identity and antisymmetry of the bracket on `cases` seeded random triples.
CheckResult jacobi_check(int cases = 50, unsigned seed = 20240611);

}  // namespace shs::hs
