#pragma once

#include "shs/cas/calculus.hpp"
#include "shs/hs/check_result.hpp"

namespace shs::hs {

/// U = u + theta xi_x.
cas::SymExpr superfield_U();
/// M = -D^3 U.
cas::SymExpr superfield_M();
/// U (D^5 U) + 1/2 (DU)(D^4 U) + 3/2 (D^2 U)(D^3 U).
cas::SymExpr superspace_rhs(const cas::SymExpr& U);
/// M_t minus the right-hand side, split into body and theta-coefficient.
cas::SuperfieldExpr superspace_system();

CheckResult superspace_check();
/// First-order variation of both residuals under du = tau xi_x,
/// dxi = tau u with an odd constant tau.
CheckResult susy_invariance_check();

}  // namespace shs::hs
