#pragma once

#include <cstdint>
#include <string_view>

namespace shs {

/// Z/2 grading: even (bosonic, commuting) or odd (fermionic, anticommuting).
enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr int bit(Parity p) { return static_cast<int>(p); }

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

constexpr Parity parity_from_bit(int b) { return (b & 1) ? Parity::odd : Parity::even; }

constexpr std::string_view to_string(Parity p) { return is_odd(p) ? "odd" : "even"; }

}  // namespace shs
