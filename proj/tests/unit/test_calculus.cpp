#include <random>

#include "catch_amalgamated.hpp"
#include "random_expr.hpp"
#include "shs/cas/calculus.hpp"

using namespace shs::cas;

namespace {

const FieldSymbol u = even_field("u");
const FieldSymbol v = even_field("v");
const FieldSymbol xi = odd_field("xi");
const FieldSymbol phi = odd_field("phi");
const FieldSymbol psi = odd_field("psi");
SymExpr U(int k, int t = 0) { return SymExpr::jet(u, k, t); }
SymExpr X(int k, int t = 0) { return SymExpr::jet(xi, k, t); }
const SymExpr theta = SymExpr::theta();

}  // namespace

TEST_CASE("dx follows the Leibniz rule") {
  CHECK(dx(U(0) * U(1)) == U(1) * U(1) + U(0) * U(2));
  CHECK(dx(X(0) * X(1)) == X(0) * X(2));
  CHECK(dx(U(0) * X(1) * X(2)) == U(1) * X(1) * X(2) + U(0) * X(1) * X(3));
}

TEST_CASE("theta, lambda and constants are x- and t-constant") {
  const SymExpr tau = SymExpr::jet(odd_field("tau", kConstant));
  CHECK(dx(theta).is_zero());
  CHECK(dt(theta).is_zero());
  CHECK(dx(SymExpr::lambda(2)).is_zero());
  CHECK(dx(tau * U(0)) == tau * U(1));
  CHECK(dt(U(1)) == U(1, 1));
}

TEST_CASE("superderivative on theta and on a superfield in components") {
  CHECK(superD(theta) == SymExpr(1));
  const SymExpr Uf = U(0) + theta * SymExpr(phi);
  CHECK(superD(Uf) == SymExpr(phi) + theta * U(1));
}

TEST_CASE("superderivative squares to dx on random expressions") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const SymExpr e = testing::random_expr(rng, 4);
    CHECK(superD(superD(e)) == dx(e));
  }
}

TEST_CASE("superfield symbols expand to components consistently") {
  const FieldSymbol G = even_field("G", kSuperfield);
  const FieldSymbol g = even_field("g");
  const FieldSymbol nu = odd_field("nu");
  RuleSet expand{superfield_components(G, SymExpr(g), SymExpr(nu))};
  const SymExpr expr = superD(SymExpr(G), 3) * SymExpr(G);
  const SymExpr components = superD(SymExpr(g) + theta * SymExpr(nu), 3) * (SymExpr(g) + theta * SymExpr(nu));
  CHECK(substitute(expr, expand) == components);
  // D^3 G = nu_x + theta g_xx
  CHECK(substitute(superD(SymExpr(G), 3), expand) == SymExpr::jet(nu, 1) + theta * SymExpr::jet(g, 2));
}

TEST_CASE("substitution with prolongation") {
  const JetFactor ut{u, 0, 1, 0};
  const SymExpr f = -(U(0) * U(1));
  CHECK(substitute(U(0, 1), RuleSet{{ut, f}}) == f);
  CHECK(substitute(U(2, 1), RuleSet{{ut, f}}) == dx(dx(f)));
  CHECK(substitute(X(0) * U(0, 1), RuleSet{{ut, X(0) * X(1)}}).is_zero());
}

TEST_CASE("substitution rejects parity-changing rules") {
  RuleSet rules;
  CHECK_THROWS_AS(rules.add(JetFactor{u, 0, 1, 0}, X(0)), ParityError);
  CHECK_NOTHROW(rules.add(JetFactor{u, 0, 1, 0}, SymExpr()));
}

TEST_CASE("reduce applies rules to a fixed point") {
  // psi_xx -> lambda^-1 m psi (a second-order linear ODE rule)
  const FieldSymbol p = even_field("p");
  const FieldSymbol m = even_field("m");
  RuleSet rules{{JetFactor{p, 2, 0, 0}, SymExpr::lambda(-1) * SymExpr(m) * SymExpr(p)}};
  const SymExpr r = reduce(SymExpr::jet(p, 4), rules);
  for (const auto& j : r.jets()) CHECK((j.symbol.name != "p" || j.dx < 2));
  CHECK_THROWS_AS(reduce(U(1), RuleSet{{JetFactor{u, 0, 0, 0}, U(0) + U(1)}}, 3), std::runtime_error);
}

TEST_CASE("theta expansion and Berezin integration") {
  CHECK(berezin(theta * U(1) * SymExpr::jet(v, 1)) == U(1) * SymExpr::jet(v, 1));
  CHECK(berezin(U(0) * SymExpr(v)).is_zero());
  const SymExpr Uf = U(0) + theta * SymExpr(phi);
  const SymExpr Vf = SymExpr(v) + theta * SymExpr(psi);
  const SymExpr expected = U(1) * SymExpr::jet(v, 1) + SymExpr::jet(phi, 1) * SymExpr(psi);
  CHECK(berezin(superD(Uf, 2) * superD(Vf)) == expected);
  const auto split = theta_expand(Uf);
  CHECK(split.body == U(0));
  CHECK(split.soul == SymExpr(phi));
  CHECK(split.reconstruct() == Uf);
  CHECK_THROWS_AS(theta_expand(SymExpr(even_field("G", kSuperfield))), std::invalid_argument);
}

TEST_CASE("soul parity is body parity plus one") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const SymExpr e = testing::random_homogeneous(rng, shs::Parity::even, 4, false);
    const auto split = theta_expand(e);
    CHECK((split.body.is_zero() || *split.body.parity() == shs::Parity::even));
    CHECK((split.soul.is_zero() || *split.soul.parity() == shs::Parity::odd));
  }
}
