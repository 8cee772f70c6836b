#include "shs/grassmann.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace shs {

IncompatibleAlgebras::IncompatibleAlgebras(int n_left, int n_right)
    : std::invalid_argument("incompatible Grassmann algebras: N=" + std::to_string(n_left) +
                            " vs N=" + std::to_string(n_right)) {}

int cardinality(GeneratorSet s) { return std::popcount(s); }

int merge_sign(GeneratorSet a, GeneratorSet b) {
  if (a & b) return 0;
  // Each generator of b jumps over the generators of a with a larger index.
  int inversions = 0;
  for (GeneratorSet rest = b; rest != 0; rest &= rest - 1) {
    const GeneratorSet lowest = rest & (~rest + 1);
    inversions += std::popcount(a & ~((lowest << 1) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

GrassmannElement::GrassmannElement(int n_generators) : n_(n_generators) {
  if (n_generators < 0 || n_generators > kMaxGenerators)
    throw std::invalid_argument("Grassmann generator count out of range: " + std::to_string(n_generators));
}

GrassmannElement GrassmannElement::scalar(int n_generators, double value) {
  return basis(n_generators, 0, value);
}

GrassmannElement GrassmannElement::generator(int n_generators, int i) {
  if (i < 1 || i > n_generators)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n_generators));
  return basis(n_generators, GeneratorSet{1} << (i - 1));
}

GrassmannElement GrassmannElement::basis(int n_generators, GeneratorSet s, double value) {
  GrassmannElement e(n_generators);
  if (n_generators < kMaxGenerators && (s >> n_generators) != 0)
    throw std::out_of_range("generator subset exceeds N=" + std::to_string(n_generators));
  e.set(s, value);
  return e;
}

double GrassmannElement::coeff(GeneratorSet s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? 0.0 : it->second;
}

void GrassmannElement::set(GeneratorSet s, double v) {
  if (v == 0.0)
    coeffs_.erase(s);
  else
    coeffs_[s] = v;
}

std::optional<Parity> GrassmannElement::parity() const {
  bool has_even = false, has_odd = false;
  for (const auto& [s, c] : coeffs_) (cardinality(s) % 2 ? has_odd : has_even) = true;
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? Parity::odd : Parity::even;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& other) {
  if (n_ != other.n_) throw IncompatibleAlgebras(n_, other.n_);
  for (const auto& [s, c] : other.coeffs_) set(s, coeff(s) + c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& other) {
  if (n_ != other.n_) throw IncompatibleAlgebras(n_, other.n_);
  for (const auto& [s, c] : other.coeffs_) set(s, coeff(s) - c);
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  if (a.n_ != b.n_) throw IncompatibleAlgebras(a.n_, b.n_);
  GrassmannElement out(a.n_);
  for (const auto& [sa, ca] : a.coeffs_) {
    for (const auto& [sb, cb] : b.coeffs_) {
      const int sign = merge_sign(sa, sb);
      if (sign == 0) continue;
      out.set(sa | sb, out.coeff(sa | sb) + sign * ca * cb);
    }
  }
  return out;
}

GrassmannElement operator*(double c, const GrassmannElement& a) {
  GrassmannElement out(a.n_);
  for (const auto& [s, v] : a.coeffs_) out.set(s, c * v);
  return out;
}

double GrassmannElement::distance(const GrassmannElement& other) const {
  if (n_ != other.n_) throw IncompatibleAlgebras(n_, other.n_);
  double d = 0.0;
  for (const auto& [s, c] : coeffs_) d = std::max(d, std::abs(c - other.coeff(s)));
  for (const auto& [s, c] : other.coeffs_)
    if (!coeffs_.count(s)) d = std::max(d, std::abs(c));
  return d;
}

std::string level_label(GeneratorSet s) {
  if (s == 0) return "1";
  std::string out;
  for (int i = 0; i < kMaxGenerators; ++i)
    if (s & (GeneratorSet{1} << i)) out += "e" + std::to_string(i + 1);
  return out;
}

std::string GrassmannElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (s != 0) os << "*" << level_label(s);
  }
  return os.str();
}

std::string parity_of(const GrassmannElement& a) {
  auto p = a.parity();
  return p ? std::string(shs::to_string(*p)) : "mixed";
}

}  // namespace shs
