#include <random>

#include "catch_amalgamated.hpp"
#include "random_expr.hpp"
#include "shs/hs/algebra.hpp"
#include "shs/hs/checks.hpp"
#include "shs/hs/conservation.hpp"
#include "shs/hs/fields.hpp"
#include "shs/hs/hamiltonian.hpp"
#include "shs/hs/lax.hpp"
#include "shs/hs/superspace.hpp"
#include "shs/hs/system.hpp"

using namespace shs::hs;
using namespace shs::hs::fields;
using shs::cas::Rational;

namespace {

const Rational half(1, 2);

AlgebraElement random_element(std::mt19937& rng) {
  return {testing::random_homogeneous(rng, shs::Parity::even, 3, false, false),
          testing::random_homogeneous(rng, shs::Parity::odd, 3, false, false)};
}

bool is_zero(const AlgebraElement& x) { return x.even_part.is_zero() && x.odd_part.is_zero(); }

}  // namespace

TEST_CASE("bracket examples") {
  const AlgebraElement bos = lie_bracket({jet(u), {}}, {jet(v), {}});
  CHECK(bos.even_part == jet(u) * jet(v, 1) - jet(u, 1) * jet(v));
  CHECK(bos.odd_part.is_zero());
  CHECK(is_zero(lie_bracket({jet(u), jet(phi)}, {jet(u), jet(phi)})));
  const AlgebraElement ferm = lie_bracket({{}, jet(phi)}, {{}, jet(psi)});
  CHECK(ferm.even_part == half * (jet(phi) * jet(psi)));
  CHECK(ferm.odd_part.is_zero());
}

TEST_CASE("inner product examples") {
  CHECK(inner_product({jet(u), {}}, {jet(v), {}}).integrand == jet(u, 1) * jet(v, 1));
  CHECK(inner_product({{}, jet(phi)}, {{}, jet(phi)}).integrand == jet(phi, 1) * jet(phi));
  CHECK(shs::cas::equals_mod_dx(jet(u, 1) * jet(v, 1), -jet(u) * jet(v, 2)));
}

TEST_CASE("B images") {
  const auto bos = bilinear_B({jet(u), {}}, {jet(u), {}});
  CHECK(bos.first == 2 * jet(u, 1) * jet(u, 2) + jet(u) * jet(u, 3));
  const auto ferm = bilinear_B({{}, jet(phi)}, {{}, jet(phi)});
  CHECK(ferm.first == half * (jet(phi) * jet(phi, 2)));
}

TEST_CASE("B is adjoint to the bracket on random elements") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    const AlgebraElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
    CHECK(shs::cas::is_exact(b_adjoint_residual(x, y, z)));
  }
}

TEST_CASE("graded antisymmetry and Jacobi on random elements") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
    CHECK(is_zero(lie_bracket(x, y) + lie_bracket(y, x)));
    CHECK(is_zero(lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                  lie_bracket(z, lie_bracket(x, y))));
  }
}

TEST_CASE("parity validation of algebra elements") {
  CHECK_NOTHROW(AlgebraElement{jet(u), jet(phi)}.validate());
  CHECK_THROWS_AS((AlgebraElement{jet(phi), jet(u)}.validate()), shs::cas::ParityError);
}

TEST_CASE("geodesic system matches the system term by term") {
  const EvolutionSystem geo = geodesic_system();
  CHECK(geo.rhs_m == 2 * jet(u, 1) * jet(u, 2) + jet(u) * jet(u, 3) + half * (jet(xi, 1) * jet(xi, 3)));
  CHECK(geo.rhs_eta ==
        jet(u) * jet(xi, 3) + Rational(3, 2) * (jet(u, 1) * jet(xi, 2)) + half * (jet(u, 2) * jet(xi, 1)));
  CHECK(*geo.rhs_m.parity() == shs::Parity::even);
  CHECK(*geo.rhs_eta.parity() == shs::Parity::odd);
}

TEST_CASE("J1 applied to (u, xi_x) gives the flow") {
  const EvolutionSystem sys = reference_system();
  const auto [row1, row2] = apply_J1(jet(u), jet(xi, 1));
  CHECK(row1 == sys.rhs_m);
  CHECK(row2 == sys.rhs_eta);
  CHECK_THROWS_AS(apply_J1(jet(xi), jet(u)), shs::cas::ParityError);
  CHECK_THROWS_AS(apply_J2(jet(u), jet(u)), shs::cas::ParityError);
  CHECK(apply_J2(jet(u), jet(xi)).first == jet(u, 3));
}

TEST_CASE("Lax x-part in components") {
  const auto rules = lax_x_rules();
  const SymExpr inv = SymExpr::lambda(-1);
  CHECK(*rules.rewrite(shs::cas::JetFactor{g, 2, 0, 0}) == half * inv * (-jet(u, 2) * jet(g) + jet(xi, 2) * jet(nu)));
  CHECK(*rules.rewrite(shs::cas::JetFactor{nu, 1, 0, 0}) == -half * inv * jet(xi, 2) * jet(g));
}

TEST_CASE("Lax ansatz parity is validated") {
  LaxAnsatz bad = standard_lax_ansatz();
  std::swap(bad.A, bad.B);
  CHECK_THROWS_AS(lax_compatibility(bad), shs::cas::ParityError);
}

TEST_CASE("conservation of the Hamiltonians") {
  CHECK(conservation_check(h1_density()));
  CHECK(conservation_check(h2_density()));
  CHECK_FALSE(conservation_check({jet(u) * jet(u)}));
  // The bosonic part of H2 alone is not conserved once fermions are present.
  CHECK_FALSE(conservation_check({half * jet(u) * jet(u, 1) * jet(u, 1)}));
  CHECK_FALSE(conservation_check({jet(u, 1) * jet(u, 1) * jet(u, 1)}));
}

TEST_CASE("every registered check passes with its controls") {
  REQUIRE(check_names().size() == 10);
  for (const auto& name : check_names()) {
    INFO(name);
    const CheckResult r = run_check(name);
    CHECK(r.pass());
    bool has_control = false;
    for (const auto& i : r.identities) has_control = has_control || !i.expect_zero || i.label.rfind("control", 0) == 0;
    CHECK(has_control);
  }
  CHECK_THROWS_AS(run_check("bogus"), std::invalid_argument);
}
