#pragma once

#include <stdexcept>
#include <string>

#include "shs/cas/expr.hpp"

namespace shs::cas {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Serializes to the s-expression format described in docs/expression_format.md:
///
///   (sum (term COEFF LAMBDA THETA FACTOR...) ...)
///   FACTOR := (NAME PARITY DEPS DX DT DTHETA)
///
/// Output is deterministic: terms appear in canonical order.
std::string serialize(const SymExpr& e);

/// Inverse of serialize; the result is normalized. Throws FormatError.
SymExpr parse_expr(const std::string& text);

}  // namespace shs::cas
