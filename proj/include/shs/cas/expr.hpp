#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shs/cas/rational.hpp"
#include "shs/cas/symbol.hpp"

namespace shs::cas {

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Structural part of a monomial: lambda^p * theta^t * f1 f2 ... fn with the
/// factors in canonical order. theta, when present, sits to the left of all
/// factors.
struct MonomialKey {
  int lambda_power = 0;
  bool theta = false;
  std::vector<JetFactor> factors;

  Parity parity() const;

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
  friend std::strong_ordering operator<=>(const MonomialKey& a, const MonomialKey& b) {
    if (auto c = a.lambda_power <=> b.lambda_power; c != 0) return c;
    if (auto c = a.theta <=> b.theta; c != 0) return c;
    return std::lexicographical_compare_three_way(a.factors.begin(), a.factors.end(), b.factors.begin(),
                                                  b.factors.end());
  }
};

struct Monomial {
  Rational coeff;
  MonomialKey key;
};

/// Sorts `factors` into canonical order. Returns the sign of the permutation
/// restricted to odd factors, or 0 when an odd factor repeats.
int canonicalize_factors(std::vector<JetFactor>& factors);

/// Multilinear differential polynomial over the rationals in graded jet
/// variables, theta and a formal commuting lambda. Always kept in canonical
/// form: merged terms, no zero coefficients.
class SymExpr {
 public:
  using TermMap = std::map<MonomialKey, Rational>;

  SymExpr() = default;
  SymExpr(int c) : SymExpr(Rational(c)) {}  // NOLINT: integer literals are expressions
  SymExpr(const Rational& c);                // NOLINT
  SymExpr(const JetFactor& j);               // NOLINT
  SymExpr(const FieldSymbol& s);             // NOLINT

  static SymExpr jet(const FieldSymbol& s, int dx = 0, int dt = 0, int dtheta = 0);
  static SymExpr theta();
  static SymExpr lambda(int power = 1);
  /// c * lambda^p * theta^t * factors (factors in the given order).
  static SymExpr monomial(const Rational& c, int lambda_power, bool theta, std::vector<JetFactor> factors);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Homogeneous parity; nullopt when mixed. The zero expression is even.
  std::optional<Parity> parity() const;
  bool is_homogeneous() const { return parity().has_value(); }

  /// Adds c * key; key must already be canonical.
  void add_term(const MonomialKey& key, const Rational& c);

  SymExpr& operator+=(const SymExpr& other);
  SymExpr& operator-=(const SymExpr& other);
  SymExpr& operator*=(const SymExpr& other);
  SymExpr operator-() const;

  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  friend bool operator==(const SymExpr&, const SymExpr&) = default;

  /// Terms carrying theta, with theta stripped (the Berezin integral).
  SymExpr theta_part() const;
  /// Terms without theta.
  SymExpr theta_free_part() const;
  /// Coefficient of lambda^p.
  SymExpr lambda_coefficient(int power) const;

  /// Every jet factor appearing in the expression.
  std::vector<JetFactor> jets() const;
  std::vector<FieldSymbol> symbols() const;
  bool contains(const FieldSymbol& s) const;

  /// Readable infix form, e.g. "u*u_xxx + 2*u_x*u_xx + 1/2*xi_x*xi_xxx".
  std::string to_string() const;

 private:
  TermMap terms_;
};

SymExpr operator*(const Rational& c, const SymExpr& e);
inline SymExpr operator*(int c, const SymExpr& e) { return Rational(c) * e; }

/// Product of two monomials with graded signs; nullopt when it vanishes.
std::optional<Monomial> multiply(const Monomial& a, const Monomial& b);

/// Idempotent canonicalization of an arbitrary list of (possibly unsorted,
/// unmerged) monomials.
SymExpr normalize(const std::vector<Monomial>& raw);
SymExpr normalize(const SymExpr& e);

}  // namespace shs::cas
