#include "shs/num/evaluate.hpp"

#include <stdexcept>

#include "shs/cas/rational.hpp"

namespace shs::num {

GrassmannElement evaluate(const cas::SymExpr& e, int n_generators, const JetValues& values) {
  GrassmannElement total(n_generators);
  for (const auto& [key, c] : e.terms()) {
    if (key.theta || key.lambda_power != 0)
      throw std::invalid_argument("cannot evaluate a term with theta or lambda: " + e.to_string());
    GrassmannElement term = GrassmannElement::scalar(n_generators, cas::to_double(c));
    for (const auto& f : key.factors) term = term * values(f);
    total += term;
  }
  return total;
}

}  // namespace shs::num
