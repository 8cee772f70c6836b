#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "shs/num/config.hpp"
#include "shs/num/grid_state.hpp"
#include "shs/num/spectral.hpp"

namespace shs::num {

/// Intermediate quantities of the right-hand side, exposed for diagnostics.
struct RhsParts {
  /// Mean-free once-integrated right-hand sides.
  LevelField u_tx;
  LevelField xi_tx;
  /// The mean constants a(t), b(t) that were removed.
  GrassmannElement a;
  GrassmannElement b;
  /// Time derivative in the zero-mean u_t gauge.
  GridState rate;
};

/// u_tx = -(u u_xx + 1/2 u_x^2 + 1/2 xi_x xi_xx) - a,
/// xi_tx = -(u xi_xx + 1/2 u_x xi_x) - b, with a, b removing the means, then
/// spectral antidifferentiation.
RhsParts rhs_parts(const GridState& state, Spectral& sp, bool dealias);
GridState rhs_once_integrated(const GridState& state, Spectral& sp, bool dealias = true);

class BlowUp : public std::runtime_error {
 public:
  BlowUp(double time, const std::string& what) : std::runtime_error(what), time_(time) {}
  double time() const { return time_; }

 private:
  double time_;
};

/// One classical fourth-order Runge-Kutta step of size dt. Throws BlowUp on
/// non-finite values or max|u_x| above the threshold.
GridState step(const GridState& state, double dt, Spectral& sp, const SolverConfig& cfg);

struct ConservedSample {
  double time = 0;
  GrassmannElement H1;
  GrassmannElement H2;
  double max_abs_ux = 0;
};

/// H1 = 1/2 int (u_x^2 + xi_xx xi_x), H2 = 1/2 int (u u_x^2 - u xi_x xi_xx),
/// evaluated levelwise by the trapezoid rule.
ConservedSample conserved_quantities(const GridState& state, Spectral& sp);

struct Trajectory {
  /// States every sample_every steps, starting with the initial state.
  std::vector<GridState> samples;
  /// Conserved quantities at the samples, plus the final time when it is
  /// not a sample.
  std::vector<ConservedSample> series;
  GridState final_state;
  std::vector<std::string> warnings;
  long steps = 0;
  bool blew_up = false;
  std::string diagnostic;
};

/// Integrates to cfg.t_end. A blow-up ends the run early with blew_up set
/// and the trajectory up to the last good step.
Trajectory evolve(const GridState& initial, const SolverConfig& cfg);

/// Largest |H(t) - H(0)| / max(|H(0)|, 1) over the series for one level.
double max_drift(const std::vector<ConservedSample>& series, GeneratorSet level, bool second);

/// Max over grid, interior samples and levels of the system residuals
///   -u_txx - (2 u_x u_xx + u u_xxx + 1/2 xi_x xi_xxx),
///   -xi_txx - (u xi_xxx + 3/2 u_x xi_xx + 1/2 u_xx xi_x),
/// with u_t from centered differences of equally spaced samples (five
/// points when available, else three). Requires at least three samples.
double residual_check(const std::vector<GridState>& history);

}  // namespace shs::num
