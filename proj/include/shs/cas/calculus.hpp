#pragma once

#include <vector>

#include "shs/cas/expr.hpp"

namespace shs::cas {

/// Total x-derivative (even derivation; theta and lambda are x-constant).
SymExpr dx(const SymExpr& e);
SymExpr dx(const SymExpr& e, int times);
/// Total t-derivative.
SymExpr dt(const SymExpr& e);
SymExpr dt(const SymExpr& e, int times);
/// Odd derivation d/dtheta: removes the explicit theta and raises the
/// theta-order of superfield jets, with the graded Leibniz sign.
SymExpr dtheta(const SymExpr& e);

/// Superderivative D = d/dtheta + theta d/dx; D(D(e)) == dx(e).
SymExpr superD(const SymExpr& e);
SymExpr superD(const SymExpr& e, int times);

/// A substitution target together with its replacement.
struct Rule {
  JetFactor target;
  SymExpr replacement;
};

/// Rule set closed under prolongation: a rule for u_t also rewrites u_tx,
/// u_txx ... by differentiating its replacement.
class RuleSet {
 public:
  RuleSet() = default;
  RuleSet(std::initializer_list<Rule> rules);

  /// Throws ParityError when the replacement's parity differs from the target's.
  void add(const JetFactor& target, const SymExpr& replacement);
  void add(const Rule& r) { add(r.target, r.replacement); }
  void merge(const RuleSet& other);

  const std::vector<Rule>& rules() const { return rules_; }

  /// The most specific rule whose target j is a derivative of, prolonged to j.
  std::optional<SymExpr> rewrite(const JetFactor& j) const;
  bool matches(const JetFactor& j) const;

 private:
  std::vector<Rule> rules_;
};

/// Simultaneous single-pass substitution followed by normalization.
SymExpr substitute(const SymExpr& e, const RuleSet& rules);
/// Substitutes repeatedly until no factor matches a rule. Throws
/// std::runtime_error when max_passes is exhausted.
SymExpr reduce(const SymExpr& e, const RuleSet& rules, int max_passes = 64);

/// e = body + theta * soul.
struct SuperfieldExpr {
  SymExpr body;
  SymExpr soul;

  SymExpr reconstruct() const { return body + SymExpr::theta() * soul; }
  friend bool operator==(const SuperfieldExpr&, const SuperfieldExpr&) = default;
};

/// Splits an expression in component fields into theta-free part and the
/// theta coefficient. Throws std::invalid_argument when a superfield jet is
/// still present (expand it with component rules first).
SuperfieldExpr theta_expand(const SymExpr& e);
/// Berezin integral: int dtheta theta = 1, int dtheta 1 = 0.
SymExpr berezin(const SymExpr& e);

/// Rule replacing a superfield symbol S by body + theta * soul; jets of S
/// (including d/dtheta) follow by prolongation.
Rule superfield_components(const FieldSymbol& superfield, const SymExpr& body, const SymExpr& soul);

/// Replaces every jet of `field` (all x-orders) by dx^k of `value`;
/// used to impose phi = xi_x, m = -u_xx and the like.
SymExpr define(const SymExpr& e, const FieldSymbol& field, const SymExpr& value);

}  // namespace shs::cas
