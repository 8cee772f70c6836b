#include "shs/cas/symbol.hpp"

namespace shs::cas {

FieldSymbol even_field(std::string name, std::uint8_t deps) { return {std::move(name), Parity::even, deps}; }

FieldSymbol odd_field(std::string name, std::uint8_t deps) { return {std::move(name), Parity::odd, deps}; }

std::string jet_name(const JetFactor& j) {
  std::string suffix;
  if (j.dtheta) suffix += "th";
  suffix.append(static_cast<std::size_t>(j.dx), 'x');
  suffix.append(static_cast<std::size_t>(j.dt), 't');
  return suffix.empty() ? j.symbol.name : j.symbol.name + "_" + suffix;
}

}  // namespace shs::cas
