#pragma once

namespace shs::num {

/// Largest difference between the symbolic system right-hand sides (-u_txx,
/// -xi_txx), evaluated on analytic trigonometric fields with exact jets, and
/// the numeric u_txx, xi_txx obtained from rhs_once_integrated, over
/// `points` random grid points.
double symbolic_numeric_mismatch(int points = 100, unsigned seed = 12, int n_modes = 64);

}  // namespace shs::num
