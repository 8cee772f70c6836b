#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "shs/parity.hpp"

namespace shs {

/// Generator subset of {1..N} stored as a bitmask; bit i-1 is generator i.
using GeneratorSet = std::uint64_t;

inline constexpr int kMaxGenerators = 64;

class IncompatibleAlgebras : public std::invalid_argument {
 public:
  IncompatibleAlgebras(int n_left, int n_right);
};

/// Sign of the product e_A * e_B, reordered into e_{A u B}; 0 when A and B overlap.
int merge_sign(GeneratorSet a, GeneratorSet b);

int cardinality(GeneratorSet s);

/// Element of the real Grassmann algebra on N anticommuting generators.
///
/// Coefficients are keyed by the generator subset of the basis monomial
/// eta_{i1} eta_{i2} ... with i1 < i2 < ...; absent keys are zero.
class GrassmannElement {
 public:
  explicit GrassmannElement(int n_generators = 2);

  static GrassmannElement scalar(int n_generators, double value);
  /// The generator eta_i, 1-based.
  static GrassmannElement generator(int n_generators, int i);
  static GrassmannElement basis(int n_generators, GeneratorSet s, double value = 1.0);

  int n_generators() const { return n_; }
  const std::map<GeneratorSet, double>& coeffs() const { return coeffs_; }

  double coeff(GeneratorSet s) const;
  double body() const { return coeff(0); }
  bool is_zero() const { return coeffs_.empty(); }

  /// Even/odd when homogeneous; nullopt for mixed elements. Zero counts as even.
  std::optional<Parity> parity() const;

  GrassmannElement& operator+=(const GrassmannElement& other);
  GrassmannElement& operator-=(const GrassmannElement& other);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(double c, const GrassmannElement& a);
  GrassmannElement operator-() const { return -1.0 * *this; }

  /// Largest absolute coefficient difference.
  double distance(const GrassmannElement& other) const;

  std::string to_string() const;

 private:
  void set(GeneratorSet s, double v);

  int n_;
  std::map<GeneratorSet, double> coeffs_;
};

inline GrassmannElement gmul(const GrassmannElement& a, const GrassmannElement& b) { return a * b; }
inline GrassmannElement gadd(const GrassmannElement& a, const GrassmannElement& b) { return a + b; }
inline GrassmannElement scale(double c, const GrassmannElement& a) { return c * a; }

/// "even", "odd" or "mixed".
std::string parity_of(const GrassmannElement& a);

/// Human readable label for a generator subset: "1" for the body, "e1e2" etc.
std::string level_label(GeneratorSet s);

}  // namespace shs
