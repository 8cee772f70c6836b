#pragma once

#include <map>
#include <vector>

#include "shs/grassmann.hpp"

namespace shs::num {

/// Component arrays of a Grassmann-valued field on the grid, keyed by
/// generator subset.
using LevelField = std::map<GeneratorSet, std::vector<double>>;

/// u and xi on n_modes points of [0, 2 pi) with values in the Grassmann
/// algebra on n_grassmann generators. u only has even-cardinality levels
/// and xi only odd ones; both maps always hold every such level.
struct GridState {
  int n_modes = 0;
  int n_grassmann = 0;
  double time = 0;
  LevelField u;
  LevelField xi;

  static GridState zero(int n_modes, int n_grassmann);

  GrassmannElement u_at(int i) const;
  GrassmannElement xi_at(int i) const;
  double max_abs() const;
  bool finite() const;
};

/// Every generator subset of {1..n} with the given cardinality parity.
std::vector<GeneratorSet> levels(int n_grassmann, Parity parity);

/// y += c * x, levelwise (time untouched).
void axpy(double c, const GridState& x, GridState& y);

/// Pointwise product of Grassmann-valued fields, truncated to n generators.
LevelField multiply(const LevelField& a, const LevelField& b);
void add_scaled(LevelField& into, double c, const LevelField& x);

double grid_point(int i, int n_modes);

}  // namespace shs::num
