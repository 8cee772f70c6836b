#include <random>

#include "catch_amalgamated.hpp"
#include "shs/cas/expr.hpp"
#include "shs/cas/text_format.hpp"
#include "random_expr.hpp"

using namespace shs::cas;

namespace {

const FieldSymbol u = even_field("u");
const FieldSymbol xi = odd_field("xi");
SymExpr U(int k) { return SymExpr::jet(u, k); }
SymExpr X(int k) { return SymExpr::jet(xi, k); }

}  // namespace

TEST_CASE("odd factors anticommute") {
  CHECK((X(1) * X(3) + X(3) * X(1)).is_zero());
  CHECK((X(1) * X(1)).is_zero());
  CHECK((SymExpr::theta() * SymExpr::theta()).is_zero());
}

TEST_CASE("reordering merges with one sign flip") {
  const Rational half(1, 2);
  const SymExpr lhs = half * (X(1) * X(3)) - half * (X(3) * X(1));
  CHECK(lhs == X(1) * X(3));
  CHECK(normalize(lhs) == lhs);
  // With the opposite sign the two terms cancel.
  CHECK((half * (X(1) * X(3)) - (-half) * (X(3) * X(1))).is_zero());
}

TEST_CASE("theta is kept to the left of all factors") {
  // xi_x * theta = -theta * xi_x
  CHECK(X(1) * SymExpr::theta() == -(SymExpr::theta() * X(1)));
  CHECK(U(1) * SymExpr::theta() == SymExpr::theta() * U(1));
}

TEST_CASE("parity is tracked through theta and odd factors") {
  CHECK(*(X(0) * X(1)).parity() == shs::Parity::even);
  CHECK(*(SymExpr::theta() * U(0)).parity() == shs::Parity::odd);
  CHECK_FALSE((U(0) + X(0)).is_homogeneous());
  CHECK(*SymExpr().parity() == shs::Parity::even);
}

TEST_CASE("lambda powers are formal and may be negative") {
  const SymExpr e = SymExpr::lambda(-1) * SymExpr::lambda(2);
  CHECK(e == SymExpr::lambda(1));
  CHECK((SymExpr::lambda(1) + 3 * U(0)).lambda_coefficient(1) == SymExpr(1));
}

TEST_CASE("normalize is idempotent and multiplicative on random expressions") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const SymExpr a = testing::random_expr(rng, 4);
    const SymExpr b = testing::random_expr(rng, 4);
    CHECK(normalize(a) == a);
    CHECK(normalize(a * b) == normalize(normalize(a) * normalize(b)));
  }
}

TEST_CASE("graded commutativity at expression level") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pa = trial % 2 ? shs::Parity::odd : shs::Parity::even;
    const auto pb = trial % 3 ? shs::Parity::odd : shs::Parity::even;
    const SymExpr a = testing::random_homogeneous(rng, pa, 3);
    const SymExpr b = testing::random_homogeneous(rng, pb, 3);
    const int sign = (shs::is_odd(pa) && shs::is_odd(pb)) ? -1 : 1;
    CHECK((a * b - Rational(sign) * (b * a)).is_zero());
  }
}

TEST_CASE("associativity of the product") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const SymExpr a = testing::random_expr(rng, 3);
    const SymExpr b = testing::random_expr(rng, 3);
    const SymExpr c = testing::random_expr(rng, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("pretty printing") {
  CHECK(SymExpr().to_string() == "0");
  const SymExpr e = U(0) * U(3) + 2 * U(1) * U(2) + Rational(1, 2) * X(1) * X(3);
  CHECK(e.to_string() == "u*u_xxx + 2*u_x*u_xx + 1/2*xi_x*xi_xxx");
}
