#include "shs/cas/variational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace shs::cas {

Density Density::over_x() const {
  if (measure == Measure::dx) return *this;
  return {berezin(integrand), Measure::dx};
}

SymExpr partial(const SymExpr& e, const JetFactor& j) {
  SymExpr out;
  for (const auto& [key, coeff] : e.terms()) {
    const auto& fs = key.factors;
    auto first = std::find(fs.begin(), fs.end(), j);
    if (first == fs.end()) continue;
    const auto power = std::count(first, fs.end(), j);
    Rational c = coeff * Rational(power);
    // Factors after the removed occurrence; only matters for odd j, which occurs once.
    Parity after = Parity::even;
    for (auto it = first + 1; it != fs.end(); ++it) after = after + it->parity();
    if (is_odd(j.parity()) && is_odd(after)) c = -c;
    MonomialKey stripped = key;
    stripped.factors.erase(stripped.factors.begin() + (first - fs.begin()));
    out.add_term(stripped, c);
  }
  return out;
}

namespace {

JetFactor family_of(const JetFactor& j) { return {j.symbol, 0, j.dt, j.dtheta}; }

bool same_family(const JetFactor& j, const JetFactor& family) {
  return j.symbol.name == family.symbol.name && j.dt == family.dt && j.dtheta == family.dtheta;
}

}  // namespace

SymExpr variational_derivative(const Density& d, const JetFactor& field) {
  const SymExpr e = d.over_x().integrand;
  SymExpr out;
  for (const auto& j : e.jets()) {
    if (!same_family(j, field)) continue;
    const SymExpr term = dx(partial(e, j), j.dx);
    if (j.dx % 2) out -= term; else out += term;
  }
  return out;
}

SymExpr variational_derivative(const Density& d, const FieldSymbol& field) {
  return variational_derivative(d, JetFactor{field, 0, 0, 0});
}

SymExpr euler_lagrange(const SymExpr& lagrangian, const FieldSymbol& field) {
  SymExpr out;
  for (const auto& j : lagrangian.jets()) {
    if (j.symbol.name != field.name || j.dtheta != 0) continue;
    const SymExpr term = dx(dt(partial(lagrangian, j), j.dt), j.dx);
    if ((j.dx + j.dt) % 2) out -= term; else out += term;
  }
  return out;
}

bool is_exact(const SymExpr& e) {
  if (e.is_zero()) return true;
  std::set<JetFactor> families;
  for (const auto& [key, c] : e.terms()) {
    bool has_x_field = false;
    for (const auto& f : key.factors) {
      if (!f.symbol.depends_on_x()) continue;
      has_x_field = true;
      families.insert(family_of(f));
    }
    // A term free of x-dependent fields integrates to a nonzero multiple of the period.
    if (!has_x_field) return false;
  }
  const Density d{e, Measure::dx};
  for (const auto& fam : families)
    if (!variational_derivative(d, fam).is_zero()) return false;
  return true;
}

bool equals_mod_dx(const SymExpr& e1, const SymExpr& e2) { return is_exact(e1 - e2); }

namespace {

// Monomials differing only in how x-derivatives are distributed over the
// same factor families form one weight class; dx maps class (w) to (w + 1).
struct WeightClass {
  int lambda_power;
  bool theta;
  std::vector<JetFactor> constants;  // x-constant factors, in canonical order
  std::vector<JetFactor> families;   // sorted, with multiplicity
  int weight;

  auto tie() const { return std::tie(lambda_power, theta, constants, families, weight); }
  friend bool operator<(const WeightClass& a, const WeightClass& b) { return a.tie() < b.tie(); }
};

WeightClass class_of(const MonomialKey& key) {
  WeightClass w{key.lambda_power, key.theta, {}, {}, 0};
  for (const auto& f : key.factors) {
    if (f.symbol.depends_on_x()) {
      w.families.push_back(family_of(f));
      w.weight += f.dx;
    } else {
      w.constants.push_back(f);
    }
  }
  std::sort(w.families.begin(), w.families.end());
  return w;
}

// All monomials of a class with the given total x-weight.
std::vector<SymExpr> enumerate_class(const WeightClass& w, int weight) {
  std::vector<SymExpr> out;
  if (weight < 0) return out;
  std::set<MonomialKey> seen;
  std::vector<int> orders(w.families.size(), 0);
  auto emit = [&] {
    std::vector<JetFactor> factors = w.constants;
    for (std::size_t i = 0; i < w.families.size(); ++i) factors.push_back(w.families[i].with_dx(orders[i]));
    SymExpr m = SymExpr::monomial(1, w.lambda_power, w.theta, std::move(factors));
    if (m.is_zero()) return;
    if (seen.insert(m.terms().begin()->first).second) out.push_back(std::move(m));
  };
  // Distribute `weight` over the factor slots.
  auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == orders.size()) {
      orders[slot] = remaining;
      emit();
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      orders[slot] = k;
      self(self, slot + 1, remaining - k);
    }
  };
  if (orders.empty()) {
    if (weight == 0) emit();
  } else {
    recurse(recurse, 0, weight);
  }
  return out;
}

struct ExactRow {
  SymExpr value;     // dx(preimage), leading monomial scaled to 1
  SymExpr preimage;
};

const MonomialKey& leading(const SymExpr& e) { return e.terms().rbegin()->first; }

// Echelon basis of dx(span of class monomials at weight w - 1), keyed by leading monomial.
std::map<MonomialKey, ExactRow> exact_basis(const WeightClass& w) {
  std::map<MonomialKey, ExactRow> basis;
  for (auto& m : enumerate_class(w, w.weight - 1)) {
    ExactRow row{dx(m), m};
    while (!row.value.is_zero()) {
      auto it = basis.find(leading(row.value));
      if (it == basis.end()) break;
      const Rational c = row.value.terms().rbegin()->second;
      row.value -= c * it->second.value;
      row.preimage -= c * it->second.preimage;
    }
    if (row.value.is_zero()) continue;
    const Rational inv = Rational(1) / row.value.terms().rbegin()->second;
    row.value = inv * row.value;
    row.preimage = inv * row.preimage;
    basis.emplace(leading(row.value), std::move(row));
  }
  return basis;
}

}  // namespace

DensityReduction reduce_density(const SymExpr& e) {
  std::map<WeightClass, SymExpr> classes;
  for (const auto& [key, c] : e.terms()) classes[class_of(key)].add_term(key, c);

  DensityReduction out;
  for (auto& [w, part] : classes) {
    if (w.families.empty()) {
      out.normal_form += part;
      continue;
    }
    const auto basis = exact_basis(w);
    SymExpr rest = part;
    // Eliminate every term that is a leading monomial of the exact subspace,
    // largest first; each subtraction only introduces smaller terms.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = rest.terms().rbegin(); it != rest.terms().rend(); ++it) {
        auto row = basis.find(it->first);
        if (row == basis.end()) continue;
        const Rational c = it->second;
        rest -= c * row->second.value;
        out.antiderivative += c * row->second.preimage;
        changed = true;
        break;
      }
    }
    out.normal_form += rest;
  }
  return out;
}

SymExpr canonical_density(const Density& d) { return reduce_density(d.over_x().integrand).normal_form; }

std::optional<SymExpr> antiderivative(const SymExpr& e) {
  auto r = reduce_density(e);
  if (!r.normal_form.is_zero()) return std::nullopt;
  return r.antiderivative;
}

}  // namespace shs::cas
