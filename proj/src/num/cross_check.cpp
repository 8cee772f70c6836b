#include "shs/num/cross_check.hpp"

#include <cmath>
#include <random>

#include "shs/hs/fields.hpp"
#include "shs/hs/system.hpp"
#include "shs/num/config.hpp"
#include "shs/num/evaluate.hpp"
#include "shs/num/solver.hpp"

namespace shs::num {

namespace {

// d^order/dx^order of c cos(kx) + s sin(kx).
double trig_jet(const FourierMode& m, int order, double x) {
  double c = m.cos, s = m.sin;
  for (int i = 0; i < order; ++i) {
    const double nc = m.k * s, ns = -m.k * c;
    c = nc;
    s = ns;
  }
  return c * std::cos(m.k * x) + s * std::sin(m.k * x);
}

GrassmannElement analytic_jet(const std::vector<LevelModes>& field, int n, int order, double x) {
  GrassmannElement out(n);
  for (const auto& lm : field) {
    double v = 0;
    for (const auto& m : lm.modes) v += trig_jet(m, order, x);
    out += GrassmannElement::basis(n, lm.level, v);
  }
  return out;
}

}  // namespace

double symbolic_numeric_mismatch(int points, unsigned seed, int n_modes) {
  const int n = 2;
  SolverConfig cfg;
  cfg.n_modes = n_modes;
  cfg.n_grassmann = n;
  InitialData data;
  data.u = {{0, {{1, 1.0, 0.0}, {2, 0.0, 0.3}}}, {3, {{3, 0.2, 0.1}}}};
  data.xi = {{1, {{1, 0.1, 0.0}, {2, 0.0, 0.05}}}, {2, {{1, 0.0, 0.2}, {3, 0.04, 0.0}}}};
  const GridState state = data.sample(cfg);

  Spectral sp(n_modes);
  const GridState rate = rhs_once_integrated(state, sp, false);
  LevelField u_txx, xi_txx;
  for (const auto& [level, v] : rate.u) u_txx[level] = sp.derivative(v, 2);
  for (const auto& [level, v] : rate.xi) xi_txx[level] = sp.derivative(v, 2);

  const hs::EvolutionSystem sys = hs::reference_system();
  std::mt19937 rng(seed);
  double worst = 0;
  for (int p = 0; p < points; ++p) {
    const int i = static_cast<int>(rng() % static_cast<unsigned>(n_modes));
    const double x = grid_point(i, n_modes);
    const JetValues values = [&](const cas::JetFactor& j) {
      if (j.dt != 0 || j.dtheta != 0) throw std::invalid_argument("unexpected jet " + cas::jet_name(j));
      if (j.symbol.name == hs::fields::u.name) return analytic_jet(data.u, n, j.dx, x);
      if (j.symbol.name == hs::fields::xi.name) return analytic_jet(data.xi, n, j.dx, x);
      throw std::invalid_argument("unexpected field " + j.symbol.name);
    };
    const GrassmannElement sym_u = evaluate(sys.rhs_u_txx(), n, values);
    const GrassmannElement sym_xi = evaluate(sys.rhs_xi_txx(), n, values);
    for (const auto& [level, v] : u_txx) worst = std::max(worst, std::abs(v[i] - sym_u.coeff(level)));
    for (const auto& [level, v] : xi_txx) worst = std::max(worst, std::abs(v[i] - sym_xi.coeff(level)));
    // Levels the numeric side does not store must vanish symbolically.
    for (const auto& [level, c] : sym_u.coeffs())
      if (!u_txx.count(level)) worst = std::max(worst, std::abs(c));
    for (const auto& [level, c] : sym_xi.coeffs())
      if (!xi_txx.count(level)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

}  // namespace shs::num
