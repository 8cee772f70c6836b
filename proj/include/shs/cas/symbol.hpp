#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "shs/parity.hpp"

namespace shs::cas {

/// Base coordinates a field may vary with.
enum Dependence : std::uint8_t {
  kConstant = 0,
  kDependsX = 1,
  kDependsT = 2,
  kDependsTheta = 4,
  kDependsXT = kDependsX | kDependsT,
  kSuperfield = kDependsX | kDependsT | kDependsTheta,
};

/// A named graded field, e.g. u (even, x/t), xi (odd, x/t), tau (odd constant).
struct FieldSymbol {
  std::string name;
  Parity parity = Parity::even;
  std::uint8_t deps = kDependsXT;

  bool depends_on_x() const { return deps & kDependsX; }
  bool depends_on_t() const { return deps & kDependsT; }
  bool depends_on_theta() const { return deps & kDependsTheta; }

  friend bool operator==(const FieldSymbol&, const FieldSymbol&) = default;
};

FieldSymbol even_field(std::string name, std::uint8_t deps = kDependsXT);
FieldSymbol odd_field(std::string name, std::uint8_t deps = kDependsXT);

/// A jet coordinate: a field with its x-, t- and theta-derivative orders.
struct JetFactor {
  FieldSymbol symbol;
  int dx = 0;
  int dt = 0;
  int dtheta = 0;

  Parity parity() const { return symbol.parity + parity_from_bit(dtheta); }
  int order() const { return dx + dt + dtheta; }

  JetFactor with_dx(int k) const { return {symbol, k, dt, dtheta}; }
  JetFactor with_dt(int k) const { return {symbol, dx, k, dtheta}; }

  friend bool operator==(const JetFactor& a, const JetFactor& b) {
    return a.symbol.name == b.symbol.name && a.dx == b.dx && a.dt == b.dt && a.dtheta == b.dtheta;
  }
  /// Canonical factor order: symbol name, then t-, theta- and x-orders.
  friend std::strong_ordering operator<=>(const JetFactor& a, const JetFactor& b) {
    if (auto c = a.symbol.name <=> b.symbol.name; c != 0) return c;
    if (auto c = a.dt <=> b.dt; c != 0) return c;
    if (auto c = a.dtheta <=> b.dtheta; c != 0) return c;
    return a.dx <=> b.dx;
  }
};

/// u_x, xi_xxt, G_th ... ; used by the pretty printer.
std::string jet_name(const JetFactor& j);

}  // namespace shs::cas
