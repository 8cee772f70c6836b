#include "shs/cas/expr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace shs::cas {

Parity MonomialKey::parity() const {
  Parity p = theta ? Parity::odd : Parity::even;
  for (const auto& f : factors) p = p + f.parity();
  return p;
}

int canonicalize_factors(std::vector<JetFactor>& factors) {
  int sign = 1;
  // Insertion sort; only transpositions of two odd factors change the sign.
  for (std::size_t i = 1; i < factors.size(); ++i) {
    for (std::size_t j = i; j > 0 && factors[j] < factors[j - 1]; --j) {
      if (is_odd(factors[j].parity()) && is_odd(factors[j - 1].parity())) sign = -sign;
      std::swap(factors[j], factors[j - 1]);
    }
  }
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (factors[i] == factors[i - 1] && is_odd(factors[i].parity())) return 0;
  return sign;
}

SymExpr::SymExpr(const Rational& c) {
  if (c != 0) terms_.emplace(MonomialKey{}, c);
}

SymExpr::SymExpr(const JetFactor& j) { terms_.emplace(MonomialKey{0, false, {j}}, Rational(1)); }

SymExpr::SymExpr(const FieldSymbol& s) : SymExpr(JetFactor{s, 0, 0, 0}) {}

SymExpr SymExpr::jet(const FieldSymbol& s, int dx, int dt, int dtheta) {
  if ((dx && !s.depends_on_x()) || (dt && !s.depends_on_t()) || (dtheta && !s.depends_on_theta()))
    return {};
  if (dtheta > 1) return {};
  return SymExpr(JetFactor{s, dx, dt, dtheta});
}

SymExpr SymExpr::theta() {
  SymExpr e;
  e.terms_.emplace(MonomialKey{0, true, {}}, Rational(1));
  return e;
}

SymExpr SymExpr::lambda(int power) {
  SymExpr e;
  e.terms_.emplace(MonomialKey{power, false, {}}, Rational(1));
  return e;
}

SymExpr SymExpr::monomial(const Rational& c, int lambda_power, bool theta, std::vector<JetFactor> factors) {
  return normalize(std::vector<Monomial>{{c, MonomialKey{lambda_power, theta, std::move(factors)}}});
}

std::optional<Parity> SymExpr::parity() const {
  std::optional<Parity> p;
  for (const auto& [key, c] : terms_) {
    const Parity q = key.parity();
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p.value_or(Parity::even);
}

void SymExpr::add_term(const MonomialKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymExpr& SymExpr::operator+=(const SymExpr& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

SymExpr& SymExpr::operator*=(const SymExpr& other) { return *this = *this * other; }

SymExpr SymExpr::operator-() const {
  SymExpr out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, -c);
  return out;
}

std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) {
  if (a.key.theta && b.key.theta) return std::nullopt;
  Rational c = a.coeff * b.coeff;
  if (c == 0) return std::nullopt;
  if (b.key.theta) {
    // Move b's theta to the front, past a's factors.
    Parity pa = Parity::even;
    for (const auto& f : a.key.factors) pa = pa + f.parity();
    if (is_odd(pa)) c = -c;
  }
  std::vector<JetFactor> factors;
  factors.reserve(a.key.factors.size() + b.key.factors.size());
  factors.insert(factors.end(), a.key.factors.begin(), a.key.factors.end());
  factors.insert(factors.end(), b.key.factors.begin(), b.key.factors.end());
  const int sign = canonicalize_factors(factors);
  if (sign == 0) return std::nullopt;
  if (sign < 0) c = -c;
  return Monomial{std::move(c),
                  MonomialKey{a.key.lambda_power + b.key.lambda_power, a.key.theta || b.key.theta,
                              std::move(factors)}};
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  SymExpr out;
  for (const auto& [ka, ca] : a.terms_) {
    const Monomial ma{ca, ka};
    for (const auto& [kb, cb] : b.terms_) {
      if (auto m = multiply(ma, Monomial{cb, kb})) out.add_term(m->key, m->coeff);
    }
  }
  return out;
}

SymExpr operator*(const Rational& c, const SymExpr& e) {
  if (c == 0) return {};
  SymExpr out;
  for (const auto& [k, v] : e.terms()) out.add_term(k, c * v);
  return out;
}

SymExpr normalize(const std::vector<Monomial>& raw) {
  SymExpr out;
  for (const auto& m : raw) {
    if (m.coeff == 0) continue;
    MonomialKey key = m.key;
    const int sign = canonicalize_factors(key.factors);
    if (sign == 0) continue;
    out.add_term(key, sign > 0 ? m.coeff : Rational(-m.coeff));
  }
  return out;
}

SymExpr normalize(const SymExpr& e) {
  std::vector<Monomial> raw;
  raw.reserve(e.size());
  for (const auto& [k, c] : e.terms()) raw.push_back({c, k});
  return normalize(raw);
}

SymExpr SymExpr::theta_part() const {
  SymExpr out;
  for (const auto& [k, c] : terms_) {
    if (!k.theta) continue;
    MonomialKey stripped = k;
    stripped.theta = false;
    out.terms_.emplace(std::move(stripped), c);
  }
  return out;
}

SymExpr SymExpr::theta_free_part() const {
  SymExpr out;
  for (const auto& [k, c] : terms_)
    if (!k.theta) out.terms_.emplace(k, c);
  return out;
}

SymExpr SymExpr::lambda_coefficient(int power) const {
  SymExpr out;
  for (const auto& [k, c] : terms_) {
    if (k.lambda_power != power) continue;
    MonomialKey stripped = k;
    stripped.lambda_power = 0;
    out.terms_.emplace(std::move(stripped), c);
  }
  return out;
}

std::vector<JetFactor> SymExpr::jets() const {
  std::set<JetFactor> seen;
  for (const auto& [k, c] : terms_) seen.insert(k.factors.begin(), k.factors.end());
  return {seen.begin(), seen.end()};
}

std::vector<FieldSymbol> SymExpr::symbols() const {
  std::vector<FieldSymbol> out;
  for (const auto& j : jets()) {
    if (out.empty() || out.back().name != j.symbol.name) out.push_back(j.symbol);
  }
  return out;
}

bool SymExpr::contains(const FieldSymbol& s) const {
  for (const auto& [k, c] : terms_)
    for (const auto& f : k.factors)
      if (f.symbol.name == s.name) return true;
  return false;
}

std::string SymExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::vector<std::string> parts;
    if (k.lambda_power != 0)
      parts.push_back(k.lambda_power == 1 ? "lambda" : "lambda^" + std::to_string(k.lambda_power));
    if (k.theta) parts.push_back("theta");
    for (const auto& f : k.factors) parts.push_back(jet_name(f));
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = mag == 1 && !parts.empty();
    if (!unit) os << cas::to_string(mag);
    for (std::size_t i = 0; i < parts.size(); ++i) os << ((i == 0 && unit) ? "" : "*") << parts[i];
  }
  return os.str();
}

}  // namespace shs::cas
