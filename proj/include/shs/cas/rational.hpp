#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shs::cas {

/// Exact coefficient field of the symbolic path.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
/// Parses "3", "-1/2"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);
double to_double(const Rational& r);

}  // namespace shs::cas
