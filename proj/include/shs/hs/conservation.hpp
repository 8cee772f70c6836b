#pragma once

#include "shs/cas/variational.hpp"
#include "shs/hs/check_result.hpp"

namespace shs::hs {

/// Outcome of differentiating int d dx along the flow. u_t and xi_t are
/// nonlocal (x-antiderivatives of the once-integrated forms), so they enter
/// as zero-mean stand-ins P, Q with P_x = once_u - a, Q_x = once_xi - b, and
/// every P-, Q-linear term is integrated by parts onto P_x, Q_x.
struct ConservationAnalysis {
  bool conserved = false;
  /// Local density whose exactness decides conservation; after the
  /// integration by parts it is the full time derivative.
  cas::SymExpr local;
  /// Nonzero when the P or Q coefficient could not be integrated.
  cas::SymExpr obstruction;
  /// Multiple of P_x dropped from the P coefficient (int P_x P dx = 0).
  cas::Rational alpha = 0;
};

ConservationAnalysis analyze_conservation(const cas::Density& d);
/// True iff d/dt int d dx vanishes on solutions.
bool conservation_check(const cas::Density& d);

CheckResult conservation_suite_check();

}  // namespace shs::hs
