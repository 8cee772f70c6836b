#pragma once

#include "shs/cas/calculus.hpp"
#include "shs/hs/check_result.hpp"

namespace shs::hs {

/// The evolution in the variables m = -u_xx, eta = -xi_xx:
///   m_t = rhs_m,   eta_t = rhs_eta.
struct EvolutionSystem {
  cas::SymExpr rhs_m;
  cas::SymExpr rhs_eta;

  cas::SymExpr rhs_u_txx() const { return -rhs_m; }
  cas::SymExpr rhs_xi_txx() const { return -rhs_eta; }

  /// u_txx -> -rhs_m, xi_txx -> -rhs_eta, closed under prolongation.
  cas::RuleSet motion_rules() const;
};

/// The system written out term by term:
///   -u_txx  = 2 u_x u_xx + u u_xxx + 1/2 xi_x xi_xxx
///   -xi_txx = u xi_xxx + 3/2 u_x xi_xx + 1/2 u_xx xi_x
EvolutionSystem reference_system();

/// Assembled from A0 u_t = A0 B0(U,U), A1 phi_t = A1 B1(U,U) with phi = xi_x.
EvolutionSystem geodesic_system();

/// Right-hand sides of the once-integrated circle forms without their mean
/// constants: u_tx = once_u - a(t), xi_tx = once_xi - b(t) with
///   once_u  = -(u u_xx + 1/2 u_x^2 + 1/2 xi_x xi_xx)
///   once_xi = -(u xi_xx + 1/2 u_x xi_x)
cas::SymExpr once_integrated_u();
cas::SymExpr once_integrated_xi();
/// u_tx -> once_u - a, xi_tx -> once_xi - b.
cas::RuleSet once_integrated_rules();

/// Residuals -u_txx - rhs_m and -xi_txx - rhs_eta of the system.
cas::SymExpr residual_u(const EvolutionSystem& s);
cas::SymExpr residual_xi(const EvolutionSystem& s);

CheckResult geodesic_check();

}  // namespace shs::hs
