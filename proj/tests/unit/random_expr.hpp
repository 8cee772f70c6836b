#pragma once

#include <random>

#include "catch_amalgamated.hpp"
#include "shs/cas/expr.hpp"

template <>
struct Catch::StringMaker<shs::cas::SymExpr> {
  static std::string convert(const shs::cas::SymExpr& e) { return e.to_string(); }
};

namespace testing {

using shs::cas::FieldSymbol;
using shs::cas::SymExpr;

inline const std::vector<FieldSymbol>& pool() {
  static const std::vector<FieldSymbol> fields = {
      shs::cas::even_field("u"), shs::cas::even_field("v"), shs::cas::odd_field("xi"),
      shs::cas::odd_field("psi"), shs::cas::even_field("G", shs::cas::kSuperfield),
      shs::cas::odd_field("M", shs::cas::kSuperfield)};
  return fields;
}

/// A random monomial with up to `max_factors` jets of the pool fields and
/// small integer or half-integer coefficient; may include theta.
inline SymExpr random_monomial(std::mt19937& rng, int max_factors, bool allow_superfields = true,
                               bool allow_theta = true) {
  std::uniform_int_distribution<int> n_factors(0, max_factors);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> order(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  const int n_fields = allow_superfields ? static_cast<int>(pool().size()) : 4;
  std::uniform_int_distribution<int> pick(0, n_fields - 1);
  int c = coeff(rng);
  if (c == 0) c = 1;
  SymExpr m = coin(rng) ? SymExpr(c) : shs::cas::Rational(c, 2) * SymExpr(1);
  if (allow_theta && coin(rng) && coin(rng)) m = SymExpr::theta() * m;
  const int k = n_factors(rng);
  for (int i = 0; i < k; ++i) {
    const FieldSymbol& f = pool()[pick(rng)];
    const int dtheta = f.depends_on_theta() ? coin(rng) : 0;
    m = m * SymExpr::jet(f, order(rng), 0, dtheta);
  }
  return m;
}

inline SymExpr random_expr(std::mt19937& rng, int max_terms, bool allow_superfields = true) {
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  SymExpr e;
  const int n = n_terms(rng);
  for (int i = 0; i < n; ++i) e += random_monomial(rng, 3, allow_superfields);
  return e;
}

/// Sum of random monomials of the requested parity (rejection sampling).
inline SymExpr random_homogeneous(std::mt19937& rng, shs::Parity p, int max_terms, bool allow_superfields = true,
                                  bool allow_theta = true) {
  std::uniform_int_distribution<int> n_terms(1, max_terms);
  SymExpr e;
  const int n = n_terms(rng);
  int added = 0;
  while (added < n) {
    SymExpr m = random_monomial(rng, 3, allow_superfields, allow_theta);
    if (m.is_zero() || *m.parity() != p) continue;
    e += m;
    ++added;
  }
  return e;
}

}  // namespace testing
