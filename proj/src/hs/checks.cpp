#include "shs/hs/checks.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "shs/hs/algebra.hpp"
#include "shs/hs/conservation.hpp"
#include "shs/hs/hamiltonian.hpp"
#include "shs/hs/lax.hpp"
#include "shs/hs/superspace.hpp"
#include "shs/hs/system.hpp"

namespace shs::hs {

namespace {

using Entry = std::pair<std::string, std::function<CheckResult()>>;

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"bracket", [] { return bracket_check(); }},
      {"geodesic", [] { return geodesic_check(); }},
      {"biham", [] { return biham_check(); }},
      {"lagrangian", [] { return lagrangian_el_check(); }},
      {"susy", [] { return susy_invariance_check(); }},
      {"superspace", [] { return superspace_check(); }},
      {"lax", [] { return lax_check(); }},
      {"recursion", [] { return recursion_eigen_check(); }},
      {"conservation", [] { return conservation_suite_check(); }},
      {"jacobi", [] { return jacobi_check(); }},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.first);
    return out;
  }();
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckResult run_check(const std::string& name) {
  for (const auto& [id, fn] : registry())
    if (id == name) return fn();
  throw std::invalid_argument("unknown check: " + name);
}

}  // namespace shs::hs
