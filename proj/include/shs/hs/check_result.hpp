#pragma once

#include <string>
#include <vector>

#include "shs/cas/expr.hpp"

namespace shs::hs {

/// One identity evaluated by a check. Negative controls expect a nonzero
/// residual; everything else must reduce to exactly zero.
struct IdentityResult {
  std::string label;
  cas::SymExpr residual;
  bool expect_zero = true;

  bool ok() const { return residual.is_zero() == expect_zero; }
};

struct CheckResult {
  std::string id;
  std::vector<IdentityResult> identities;
  std::vector<std::string> notes;

  bool pass() const {
    for (const auto& i : identities)
      if (!i.ok()) return false;
    return !identities.empty();
  }

  void expect_zero(std::string label, cas::SymExpr residual) {
    identities.push_back({std::move(label), std::move(residual), true});
  }
  void expect_nonzero(std::string label, cas::SymExpr residual) {
    identities.push_back({std::move(label), std::move(residual), false});
  }
  void expect_true(std::string label, bool holds) {
    // Boolean predicates are recorded as a 0/1 residual.
    identities.push_back({std::move(label), holds ? cas::SymExpr() : cas::SymExpr(1), true});
  }
};

}  // namespace shs::hs
