#include "shs/num/solver.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace shs::num {

namespace {

struct Jets {
  LevelField f0, f1, f2, f3;
};

Jets jets(const LevelField& f, Spectral& sp, bool filter, int max_order) {
  Jets j;
  for (const auto& [level, values] : f) {
    auto d = sp.derivatives(values, max_order, filter);
    j.f0[level] = std::move(d[0]);
    j.f1[level] = std::move(d[1]);
    j.f2[level] = std::move(d[2]);
    if (max_order >= 3) j.f3[level] = std::move(d[3]);
  }
  return j;
}

double max_abs(const LevelField& f) {
  double m = 0;
  for (const auto& [level, values] : f)
    for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

RhsParts rhs_parts(const GridState& state, Spectral& sp, bool dealias) {
  const Jets u = jets(state.u, sp, dealias, 2);
  const Jets xi = jets(state.xi, sp, dealias, 2);
  RhsParts out{{}, {}, GrassmannElement(state.n_grassmann), GrassmannElement(state.n_grassmann),
               GridState::zero(state.n_modes, state.n_grassmann)};
  out.rate.time = state.time;

  LevelField su = multiply(u.f0, u.f2);
  add_scaled(su, 0.5, multiply(u.f1, u.f1));
  add_scaled(su, 0.5, multiply(xi.f1, xi.f2));
  LevelField sxi = multiply(u.f0, xi.f2);
  add_scaled(sxi, 0.5, multiply(u.f1, xi.f1));

  // Products of even-level u and odd-level xi land on the right levels, so
  // only the stored levels are read back.
  for (auto& [level, target] : out.rate.u) {
    std::vector<double> v = su.count(level) ? su.at(level) : std::vector<double>(state.n_modes, 0.0);
    const double a = -Spectral::mean(v);
    for (double& x : v) x = -x - a;
    out.a += GrassmannElement::basis(state.n_grassmann, level, a);
    target = sp.antiderivative(v, dealias);
    out.u_tx[level] = std::move(v);
  }
  for (auto& [level, target] : out.rate.xi) {
    std::vector<double> v = sxi.count(level) ? sxi.at(level) : std::vector<double>(state.n_modes, 0.0);
    const double b = -Spectral::mean(v);
    for (double& x : v) x = -x - b;
    out.b += GrassmannElement::basis(state.n_grassmann, level, b);
    target = sp.antiderivative(v, dealias);
    out.xi_tx[level] = std::move(v);
  }
  return out;
}

GridState rhs_once_integrated(const GridState& state, Spectral& sp, bool dealias) {
  return rhs_parts(state, sp, dealias).rate;
}

GridState step(const GridState& state, double dt, Spectral& sp, const SolverConfig& cfg) {
  const GridState k1 = rhs_once_integrated(state, sp, cfg.dealias);
  GridState tmp = state;
  axpy(dt / 2, k1, tmp);
  const GridState k2 = rhs_once_integrated(tmp, sp, cfg.dealias);
  tmp = state;
  axpy(dt / 2, k2, tmp);
  const GridState k3 = rhs_once_integrated(tmp, sp, cfg.dealias);
  tmp = state;
  axpy(dt, k3, tmp);
  const GridState k4 = rhs_once_integrated(tmp, sp, cfg.dealias);

  GridState next = state;
  axpy(dt / 6, k1, next);
  axpy(dt / 3, k2, next);
  axpy(dt / 3, k3, next);
  axpy(dt / 6, k4, next);
  next.time = state.time + dt;

  if (!next.finite()) {
    std::ostringstream msg;
    msg << "non-finite values at t = " << next.time;
    throw BlowUp(next.time, msg.str());
  }
  LevelField ux;
  for (const auto& [level, values] : next.u) ux[level] = sp.derivative(values, 1);
  const double slope = max_abs(ux);
  if (slope > cfg.blowup_threshold) {
    std::ostringstream msg;
    msg << "wave breaking: max|u_x| = " << slope << " at t = " << next.time;
    throw BlowUp(next.time, msg.str());
  }
  return next;
}

ConservedSample conserved_quantities(const GridState& state, Spectral& sp) {
  const Jets u = jets(state.u, sp, false, 2);
  const Jets xi = jets(state.xi, sp, false, 2);
  LevelField h1 = multiply(u.f1, u.f1);
  add_scaled(h1, 1.0, multiply(xi.f2, xi.f1));
  LevelField h2 = multiply(u.f0, multiply(u.f1, u.f1));
  add_scaled(h2, -1.0, multiply(u.f0, multiply(xi.f1, xi.f2)));

  ConservedSample out{state.time, GrassmannElement(state.n_grassmann), GrassmannElement(state.n_grassmann),
                      max_abs(u.f1)};
  const double w = 0.5 * sp.spacing();
  auto integrate = [&](const LevelField& f, GrassmannElement& into) {
    for (const auto& [level, values] : f)
      into += GrassmannElement::basis(state.n_grassmann, level, w * std::accumulate(values.begin(), values.end(), 0.0));
  };
  integrate(h1, out.H1);
  integrate(h2, out.H2);
  return out;
}

Trajectory evolve(const GridState& initial, const SolverConfig& cfg) {
  cfg.validate();
  Spectral sp(cfg.n_modes);
  Trajectory tr;
  GridState state = initial;
  tr.samples.push_back(state);
  tr.series.push_back(conserved_quantities(state, sp));

  const long n_steps = static_cast<long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
  bool cfl_warned = false;
  for (long s = 0; s < n_steps; ++s) {
    const double h = std::min(cfg.dt, cfg.t_end - state.time);
    if (!cfl_warned && h * state.max_abs() > sp.spacing()) {
      std::ostringstream msg;
      msg << "CFL: dt * max|u| exceeds the grid spacing at t = " << state.time;
      tr.warnings.push_back(msg.str());
      cfl_warned = true;
    }
    try {
      state = step(state, h, sp, cfg);
    } catch (const BlowUp& e) {
      tr.blew_up = true;
      tr.diagnostic = e.what();
      break;
    }
    ++tr.steps;
    if (tr.steps % cfg.sample_every == 0) {
      tr.samples.push_back(state);
      tr.series.push_back(conserved_quantities(state, sp));
    }
  }
  if (tr.series.back().time != state.time) tr.series.push_back(conserved_quantities(state, sp));
  tr.final_state = state;
  return tr;
}

double max_drift(const std::vector<ConservedSample>& series, GeneratorSet level, bool second) {
  if (series.empty()) return 0;
  auto value = [&](const ConservedSample& c) { return (second ? c.H2 : c.H1).coeff(level); };
  const double h0 = value(series.front());
  const double scale = std::max(std::abs(h0), 1.0);
  double worst = 0;
  for (const auto& c : series) worst = std::max(worst, std::abs(value(c) - h0) / scale);
  return worst;
}

double residual_check(const std::vector<GridState>& history) {
  if (history.size() < 3) throw std::invalid_argument("residual_check needs at least three samples");
  const int n = history.front().n_modes;
  const double h = history[1].time - history[0].time;
  for (std::size_t i = 1; i < history.size(); ++i)
    if (std::abs(history[i].time - history[i - 1].time - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw std::invalid_argument("residual_check needs equally spaced samples");
  if (!(h > 0)) return 0;

  Spectral sp(n);
  const bool five = history.size() >= 5;
  const std::size_t r = five ? 2 : 1;
  double worst = 0;
  for (std::size_t t = r; t + r < history.size(); ++t) {
    auto time_derivative = [&](const LevelField GridState::*field) {
      LevelField out;
      for (const auto& [level, values] : history[t].*field) {
        std::vector<double> d(n);
        for (int i = 0; i < n; ++i) {
          const auto at = [&](int off) { return (history[t + off].*field).at(level)[i]; };
          d[i] = five ? (-at(2) + 8 * at(1) - 8 * at(-1) + at(-2)) / (12 * h) : (at(1) - at(-1)) / (2 * h);
        }
        out[level] = sp.derivative(d, 2);
      }
      return out;
    };
    const LevelField u_txx = time_derivative(&GridState::u);
    const LevelField xi_txx = time_derivative(&GridState::xi);
    const Jets u = jets(history[t].u, sp, false, 3);
    const Jets xi = jets(history[t].xi, sp, false, 3);

    LevelField res_u = multiply(u.f1, u.f2);
    for (auto& [level, v] : res_u)
      for (double& x : v) x *= 2;
    add_scaled(res_u, 1.0, multiply(u.f0, u.f3));
    add_scaled(res_u, 0.5, multiply(xi.f1, xi.f3));
    add_scaled(res_u, 1.0, u_txx);
    LevelField res_xi = multiply(u.f0, xi.f3);
    add_scaled(res_xi, 1.5, multiply(u.f1, xi.f2));
    add_scaled(res_xi, 0.5, multiply(u.f2, xi.f1));
    add_scaled(res_xi, 1.0, xi_txx);
    worst = std::max({worst, max_abs(res_u), max_abs(res_xi)});
  }
  return worst;
}

}  // namespace shs::num
