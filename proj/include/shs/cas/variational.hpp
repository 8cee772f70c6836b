#pragma once

#include <optional>
#include <vector>

#include "shs/cas/calculus.hpp"
#include "shs/cas/expr.hpp"

namespace shs::cas {

enum class Measure { dx, dx_dtheta };

/// Integrand of int dx (or int dx dtheta), meaningful up to exact terms.
struct Density {
  SymExpr integrand;
  Measure measure = Measure::dx;

  /// The equivalent int dx density (Berezin integral applied for dx_dtheta).
  Density over_x() const;
};

/// Partial derivative with respect to a jet coordinate, taken with the
/// variation on the right: e = d(e)/d(j) * j + (terms without j).
SymExpr partial(const SymExpr& e, const JetFactor& j);

/// Spatial Euler operator sum_k (-Dx)^k d/d(f_(k)). The variable is the
/// x-jet family of `field` at fixed t- and theta-orders (so u_t counts as a
/// separate field). For odd fields the variation sits to the right:
/// dF = int (dF/df) df.
SymExpr variational_derivative(const Density& d, const JetFactor& field);
SymExpr variational_derivative(const Density& d, const FieldSymbol& field);

/// Space-time Euler operator sum_{i,j} (-Dx)^i (-Dt)^j d/d(f_(i,j)).
SymExpr euler_lagrange(const SymExpr& lagrangian, const FieldSymbol& field);

/// True iff e1 - e2 is a total x-derivative: its Euler operator vanishes for
/// every x-dependent field family and it has no part free of such fields.
bool equals_mod_dx(const SymExpr& e1, const SymExpr& e2);
bool is_exact(const SymExpr& e);

/// Representative of e modulo exact terms together with the antiderivative
/// of the difference: e = normal_form + dx(antiderivative).
struct DensityReduction {
  SymExpr normal_form;
  SymExpr antiderivative;
};

/// Unique normal form modulo total x-derivatives: the remainder of e after
/// eliminating the leading monomials of the exact subspace in each
/// homogeneous weight class.
DensityReduction reduce_density(const SymExpr& e);
SymExpr canonical_density(const Density& d);
/// K with dx(K) == e, or nullopt when e is not exact.
std::optional<SymExpr> antiderivative(const SymExpr& e);

}  // namespace shs::cas
