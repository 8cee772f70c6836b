#pragma once

#include <functional>

#include "shs/cas/expr.hpp"
#include "shs/grassmann.hpp"

namespace shs::num {

using JetValues = std::function<GrassmannElement(const cas::JetFactor&)>;

/// Value of a theta- and lambda-free expression when every jet factor is
/// replaced by a Grassmann number. Odd jets must map to odd elements for the
/// signs to be meaningful. Throws std::invalid_argument on theta or lambda.
GrassmannElement evaluate(const cas::SymExpr& e, int n_generators, const JetValues& values);

}  // namespace shs::num
