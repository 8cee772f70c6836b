#pragma once

#include "shs/cas/expr.hpp"

/// Field symbols shared by the structure checks.
namespace shs::hs::fields {

using cas::FieldSymbol;
using cas::SymExpr;

inline const FieldSymbol u = cas::even_field("u");
inline const FieldSymbol xi = cas::odd_field("xi");
inline const FieldSymbol v = cas::even_field("v");
inline const FieldSymbol w = cas::even_field("w");
inline const FieldSymbol phi = cas::odd_field("phi");
inline const FieldSymbol psi = cas::odd_field("psi");
inline const FieldSymbol chi = cas::odd_field("chi");
/// Lax eigenfunction components, G = g + theta nu.
inline const FieldSymbol g = cas::even_field("g");
inline const FieldSymbol nu = cas::odd_field("nu");
/// Bosonic Lax eigenfunction.
inline const FieldSymbol y = cas::even_field("y");
/// Odd constant parameter of the supersymmetry transformation.
inline const FieldSymbol tau = cas::odd_field("tau", cas::kConstant);
/// Mean-value constants of the once-integrated system (functions of t only).
inline const FieldSymbol a = cas::even_field("a", cas::kDependsT);
inline const FieldSymbol b = cas::odd_field("b", cas::kDependsT);
/// Stand-ins for u_t and xi_t in the conservation check.
inline const FieldSymbol p = cas::even_field("P", cas::kDependsX);
inline const FieldSymbol q = cas::odd_field("Q", cas::kDependsX);

inline SymExpr jet(const FieldSymbol& s, int x_order = 0, int t_order = 0) {
  return SymExpr::jet(s, x_order, t_order);
}

}  // namespace shs::hs::fields
