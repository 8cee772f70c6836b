#pragma once

#include <utility>

#include "shs/cas/variational.hpp"
#include "shs/hs/check_result.hpp"

namespace shs::hs {

/// First Hamiltonian operator with m = -u_xx, eta = -xi_xx:
///   row 1: (-dx m - m dx) p_m + (1/2 dx eta + eta dx) p_eta
///   row 2: (-dx eta - 1/2 eta dx) p_m - m/2 p_eta
/// Throws cas::ParityError unless p_m is even and p_eta odd.
std::pair<cas::SymExpr, cas::SymExpr> apply_J1(const cas::SymExpr& p_m, const cas::SymExpr& p_eta);
/// J2 = diag(dx^3, dx^2).
std::pair<cas::SymExpr, cas::SymExpr> apply_J2(const cas::SymExpr& p_m, const cas::SymExpr& p_eta);

/// 1/2 (u_x^2 + xi_xx xi_x)
cas::Density h1_density();
/// 1/2 (u u_x^2 - u xi_x xi_xx)
cas::Density h2_density();

CheckResult biham_check();
CheckResult lagrangian_el_check();

}  // namespace shs::hs
