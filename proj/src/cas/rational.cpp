#include "shs/cas/rational.hpp"

#include <stdexcept>

namespace shs::cas {

std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + text + "'");
  using boost::multiprecision::cpp_int;
  const cpp_int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(cpp_int(num[0] == '+' ? num.substr(1) : num), d);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace shs::cas
