#include "shs/cas/calculus.hpp"

#include <map>
#include <stdexcept>

namespace shs::cas {

namespace {

enum class Coordinate { x, t };

SymExpr even_derivative(const SymExpr& e, Coordinate c) {
  std::vector<Monomial> raw;
  for (const auto& [key, coeff] : e.terms()) {
    for (std::size_t i = 0; i < key.factors.size(); ++i) {
      const JetFactor& f = key.factors[i];
      const bool depends = c == Coordinate::x ? f.symbol.depends_on_x() : f.symbol.depends_on_t();
      if (!depends) continue;
      MonomialKey next = key;
      (c == Coordinate::x ? next.factors[i].dx : next.factors[i].dt) += 1;
      raw.push_back({coeff, std::move(next)});
    }
  }
  return normalize(raw);
}

}  // namespace

SymExpr dx(const SymExpr& e) { return even_derivative(e, Coordinate::x); }

SymExpr dx(const SymExpr& e, int times) {
  SymExpr out = e;
  for (int i = 0; i < times; ++i) out = dx(out);
  return out;
}

SymExpr dt(const SymExpr& e) { return even_derivative(e, Coordinate::t); }

SymExpr dt(const SymExpr& e, int times) {
  SymExpr out = e;
  for (int i = 0; i < times; ++i) out = dt(out);
  return out;
}

SymExpr dtheta(const SymExpr& e) {
  std::vector<Monomial> raw;
  for (const auto& [key, coeff] : e.terms()) {
    if (key.theta) {
      // d/dtheta (theta F) = F - theta dF/dtheta
      MonomialKey stripped = key;
      stripped.theta = false;
      raw.push_back({coeff, stripped});
      Parity passed = Parity::even;
      for (std::size_t i = 0; i < key.factors.size(); ++i) {
        const JetFactor& f = key.factors[i];
        if (f.symbol.depends_on_theta() && f.dtheta == 0) {
          MonomialKey next = key;
          next.factors[i].dtheta = 1;
          raw.push_back({is_odd(passed) ? Rational(coeff) : Rational(-coeff), std::move(next)});
        }
        passed = passed + f.parity();
      }
      continue;
    }
    Parity passed = Parity::even;
    for (std::size_t i = 0; i < key.factors.size(); ++i) {
      const JetFactor& f = key.factors[i];
      if (f.symbol.depends_on_theta() && f.dtheta == 0) {
        MonomialKey next = key;
        next.factors[i].dtheta = 1;
        raw.push_back({is_odd(passed) ? Rational(-coeff) : Rational(coeff), std::move(next)});
      }
      passed = passed + f.parity();
    }
  }
  return normalize(raw);
}

SymExpr superD(const SymExpr& e) { return dtheta(e) + SymExpr::theta() * dx(e); }

SymExpr superD(const SymExpr& e, int times) {
  SymExpr out = e;
  for (int i = 0; i < times; ++i) out = superD(out);
  return out;
}

RuleSet::RuleSet(std::initializer_list<Rule> rules) {
  for (const auto& r : rules) add(r);
}

void RuleSet::add(const JetFactor& target, const SymExpr& replacement) {
  const auto p = replacement.parity();
  if (!replacement.is_zero() && (!p || *p != target.parity()))
    throw ParityError("rule for " + jet_name(target) + " (" + std::string(to_string(target.parity())) +
                      ") has replacement of different parity: " + replacement.to_string());
  rules_.push_back({target, replacement});
}

void RuleSet::merge(const RuleSet& other) {
  for (const auto& r : other.rules_) add(r);
}

namespace {

bool is_derivative_of(const JetFactor& j, const JetFactor& base) {
  return j.symbol.name == base.symbol.name && j.dx >= base.dx && j.dt >= base.dt && j.dtheta >= base.dtheta;
}

}  // namespace

bool RuleSet::matches(const JetFactor& j) const {
  for (const auto& r : rules_)
    if (is_derivative_of(j, r.target)) return true;
  return false;
}

std::optional<SymExpr> RuleSet::rewrite(const JetFactor& j) const {
  const Rule* best = nullptr;
  for (const auto& r : rules_) {
    if (!is_derivative_of(j, r.target)) continue;
    if (!best || r.target.order() > best->target.order()) best = &r;
  }
  if (!best) return std::nullopt;
  SymExpr out = dx(dt(best->replacement, j.dt - best->target.dt), j.dx - best->target.dx);
  if (j.dtheta > best->target.dtheta) out = dtheta(out);
  return out;
}

SymExpr substitute(const SymExpr& e, const RuleSet& rules) {
  std::map<JetFactor, std::optional<SymExpr>> cache;
  auto lookup = [&](const JetFactor& j) -> const std::optional<SymExpr>& {
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, rules.rewrite(j)).first;
    return it->second;
  };
  SymExpr out;
  for (const auto& [key, coeff] : e.terms()) {
    bool touched = false;
    for (const auto& f : key.factors) touched = touched || lookup(f).has_value();
    if (!touched) {
      out.add_term(key, coeff);
      continue;
    }
    SymExpr product = SymExpr::monomial(coeff, key.lambda_power, key.theta, {});
    for (const auto& f : key.factors) {
      const auto& r = lookup(f);
      product = product * (r ? *r : SymExpr(f));
      if (product.is_zero()) break;
    }
    out += product;
  }
  return out;
}

SymExpr reduce(const SymExpr& e, const RuleSet& rules, int max_passes) {
  SymExpr current = e;
  for (int pass = 0; pass < max_passes; ++pass) {
    bool reducible = false;
    for (const auto& j : current.jets()) reducible = reducible || rules.matches(j);
    if (!reducible) return current;
    current = substitute(current, rules);
  }
  throw std::runtime_error("reduce: rule set did not terminate after " + std::to_string(max_passes) + " passes");
}

SuperfieldExpr theta_expand(const SymExpr& e) {
  for (const auto& j : e.jets())
    if (j.symbol.depends_on_theta())
      throw std::invalid_argument("theta_expand: superfield jet " + jet_name(j) + " must be expanded first");
  return {e.theta_free_part(), e.theta_part()};
}

SymExpr berezin(const SymExpr& e) { return theta_expand(e).soul; }

Rule superfield_components(const FieldSymbol& superfield, const SymExpr& body, const SymExpr& soul) {
  return {JetFactor{superfield, 0, 0, 0}, body + SymExpr::theta() * soul};
}

SymExpr define(const SymExpr& e, const FieldSymbol& field, const SymExpr& value) {
  return substitute(e, RuleSet{{JetFactor{field, 0, 0, 0}, value}});
}

}  // namespace shs::cas
