#pragma once

#include <string>
#include <vector>

#include "shs/hs/check_result.hpp"

namespace shs::hs {

/// Registered check ids in report order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);
/// Runs one registered check. Throws std::invalid_argument for unknown ids.
CheckResult run_check(const std::string& name);

}  // namespace shs::hs
