#include "shs/num/grid_state.hpp"

#include <cmath>
#include <numbers>

namespace shs::num {

std::vector<GeneratorSet> levels(int n_grassmann, Parity parity) {
  std::vector<GeneratorSet> out;
  for (GeneratorSet s = 0; s < (GeneratorSet{1} << n_grassmann); ++s)
    if ((cardinality(s) % 2 == 1) == is_odd(parity)) out.push_back(s);
  return out;
}

GridState GridState::zero(int n_modes, int n_grassmann) {
  GridState s;
  s.n_modes = n_modes;
  s.n_grassmann = n_grassmann;
  for (GeneratorSet l : levels(n_grassmann, Parity::even)) s.u[l].assign(n_modes, 0.0);
  for (GeneratorSet l : levels(n_grassmann, Parity::odd)) s.xi[l].assign(n_modes, 0.0);
  return s;
}

namespace {

GrassmannElement value_at(const LevelField& f, int n, int i) {
  GrassmannElement out(n);
  for (const auto& [level, values] : f) out += GrassmannElement::basis(n, level, values[i]);
  return out;
}

}  // namespace

GrassmannElement GridState::u_at(int i) const { return value_at(u, n_grassmann, i); }
GrassmannElement GridState::xi_at(int i) const { return value_at(xi, n_grassmann, i); }

double GridState::max_abs() const {
  double m = 0;
  for (const LevelField* f : {&u, &xi})
    for (const auto& [level, values] : *f)
      for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

bool GridState::finite() const {
  for (const LevelField* f : {&u, &xi})
    for (const auto& [level, values] : *f)
      for (double v : values)
        if (!std::isfinite(v)) return false;
  return true;
}

void add_scaled(LevelField& into, double c, const LevelField& x) {
  for (const auto& [level, values] : x) {
    auto& target = into[level];
    if (target.empty()) target.assign(values.size(), 0.0);
    for (std::size_t i = 0; i < values.size(); ++i) target[i] += c * values[i];
  }
}

void axpy(double c, const GridState& x, GridState& y) {
  add_scaled(y.u, c, x.u);
  add_scaled(y.xi, c, x.xi);
}

LevelField multiply(const LevelField& a, const LevelField& b) {
  LevelField out;
  for (const auto& [la, va] : a) {
    for (const auto& [lb, vb] : b) {
      const int sign = merge_sign(la, lb);
      if (sign == 0) continue;
      auto& target = out[la | lb];
      if (target.empty()) target.assign(va.size(), 0.0);
      for (std::size_t i = 0; i < va.size(); ++i) target[i] += sign * va[i] * vb[i];
    }
  }
  return out;
}

double grid_point(int i, int n_modes) { return 2 * std::numbers::pi * i / n_modes; }

}  // namespace shs::num
