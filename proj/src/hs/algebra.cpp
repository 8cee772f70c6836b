#include "shs/hs/algebra.hpp"

#include <random>

#include "shs/hs/fields.hpp"

namespace shs::hs {

using cas::dx;
using cas::Rational;
using cas::superD;
using cas::SymExpr;

namespace {

const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);

void require_parity(const SymExpr& e, Parity p, const char* what) {
  const auto actual = e.parity();
  if (!e.is_zero() && (!actual || *actual != p))
    throw cas::ParityError(std::string(what) + " must be " + std::string(to_string(p)) + ": " + e.to_string());
}

}  // namespace

void AlgebraElement::validate() const {
  require_parity(even_part, Parity::even, "bosonic component");
  require_parity(odd_part, Parity::odd, "fermionic component");
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  return {x.even_part + y.even_part, x.odd_part + y.odd_part};
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  return {x.even_part - y.even_part, x.odd_part - y.odd_part};
}

AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y) {
  const SymExpr& u = x.even_part;
  const SymExpr& phi = x.odd_part;
  const SymExpr& v = y.even_part;
  const SymExpr& psi = y.odd_part;
  return {u * dx(v) - dx(u) * v + kHalf * (phi * psi),
          u * dx(psi) - kHalf * (dx(u) * psi) - dx(phi) * v + kHalf * (phi * dx(v))};
}

cas::Density inner_product(const AlgebraElement& x, const AlgebraElement& y) {
  return {dx(x.even_part) * dx(y.even_part) + dx(x.odd_part) * y.odd_part, cas::Measure::dx};
}

SymExpr apply_A0(const SymExpr& f) { return -dx(f, 2); }
SymExpr apply_A1(const SymExpr& f) { return -dx(f); }

SymExpr inner_product_operator_form(const AlgebraElement& x, const AlgebraElement& y) {
  return x.even_part * apply_A0(y.even_part) + x.odd_part * apply_A1(y.odd_part);
}

std::pair<SymExpr, SymExpr> bilinear_B(const AlgebraElement& x, const AlgebraElement& y) {
  const SymExpr& u = x.even_part;
  const SymExpr& phi = x.odd_part;
  const SymExpr& v = y.even_part;
  const SymExpr& psi = y.odd_part;
  SymExpr a0b0 = -(2 * dx(v) * apply_A0(u) + v * apply_A0(dx(u)) + kThreeHalves * (dx(psi) * apply_A1(phi)) +
                   kHalf * (psi * apply_A1(dx(phi))));
  SymExpr a1b1 = -(kThreeHalves * (dx(v) * apply_A1(phi)) + v * apply_A1(dx(phi)) + kHalf * (psi * apply_A0(u)));
  return {std::move(a0b0), std::move(a1b1)};
}

SymExpr b_adjoint_residual(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
  const SymExpr lhs = inner_product(x, lie_bracket(y, z)).integrand;
  const auto [a0b0, a1b1] = bilinear_B(x, y);
  // int B0 A0 z0 = int (A0 B0) z0 (A0 symmetric); int B1 A1 z1 = int (B1)_x z1 = -int (A1 B1) z1.
  const SymExpr rhs = a0b0 * z.even_part - a1b1 * z.odd_part;
  return lhs - rhs;
}

SymExpr superfield(const AlgebraElement& x) { return x.even_part + SymExpr::theta() * x.odd_part; }

SymExpr super_bracket(const SymExpr& U, const SymExpr& V) {
  return U * superD(V, 2) - V * superD(U, 2) + kHalf * (superD(U) * superD(V));
}

cas::Density super_inner_product(const SymExpr& U, const SymExpr& V) {
  return {superD(U, 2) * superD(V), cas::Measure::dx_dtheta};
}

SymExpr super_B_image(const SymExpr& U, const SymExpr& V) {
  return V * superD(U, 5) + kHalf * (superD(V) * superD(U, 4)) + kThreeHalves * (superD(V, 2) * superD(U, 3));
}

namespace {

using namespace fields;

const AlgebraElement kX{jet(u), jet(phi)};
const AlgebraElement kY{jet(v), jet(psi)};
const AlgebraElement kZ{jet(w), jet(chi)};

// Deterministic across standard libraries: only mt19937 output is used.
struct Draw {
  std::mt19937 rng;
  int below(int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }
};

SymExpr random_component(Draw& d, Parity p) {
  static const FieldSymbol pool[] = {u, v, xi, psi};
  SymExpr out;
  const int terms = 1 + d.below(3);
  int made = 0;
  while (made < terms) {
    int c = d.below(7) - 3;
    if (c == 0) c = 1;
    SymExpr m(c);
    const int factors = 1 + d.below(3);
    for (int i = 0; i < factors; ++i) m = m * SymExpr::jet(pool[d.below(4)], d.below(3));
    if (m.is_zero() || *m.parity() != p) continue;
    out += m;
    ++made;
  }
  return out;
}

AlgebraElement random_element(Draw& d) {
  return {random_component(d, Parity::even), random_component(d, Parity::odd)};
}

}  // namespace

CheckResult bracket_check() {
  CheckResult r{"bracket", {}, {}};
  const AlgebraElement bosonic_x{jet(u), {}};
  const AlgebraElement bosonic_y{jet(v), {}};
  r.expect_zero("bracket of bosonic pair", lie_bracket(bosonic_x, bosonic_y).even_part -
                                               (jet(u) * jet(v, 1) - jet(u, 1) * jet(v)));
  r.expect_zero("bracket of fermionic pair",
                lie_bracket({{}, jet(phi)}, {{}, jet(psi)}).even_part - kHalf * (jet(phi) * jet(psi)));
  const AlgebraElement self = lie_bracket(kX, kX);
  r.expect_zero("[X,X] bosonic part", self.even_part);
  r.expect_zero("[X,X] fermionic part", self.odd_part);

  const SymExpr ip = inner_product(kX, kY).integrand;
  r.expect_true("inner product equals operator form mod dx",
                cas::equals_mod_dx(ip, inner_product_operator_form(kX, kY)));
  r.expect_true("inner product symmetric mod dx", cas::equals_mod_dx(ip, inner_product(kY, kX).integrand));
  r.expect_true("B adjoint to bracket mod dx", cas::is_exact(b_adjoint_residual(kX, kY, kZ)));

  const cas::SuperfieldExpr sb = cas::theta_expand(super_bracket(superfield(kX), superfield(kY)));
  const AlgebraElement cb = lie_bracket(kX, kY);
  r.expect_zero("superspace bracket body", sb.body - cb.even_part);
  r.expect_zero("superspace bracket soul", sb.soul - cb.odd_part);
  r.expect_true("superspace metric is the H1-dot pairing",
                cas::equals_mod_dx(super_inner_product(superfield(kX), superfield(kY)).over_x().integrand, ip));
  const auto [a0b0, a1b1] = bilinear_B(kX, kY);
  const cas::SuperfieldExpr sbi = cas::theta_expand(super_B_image(superfield(kX), superfield(kY)));
  r.expect_zero("superspace B body is A1 B1", sbi.body - a1b1);
  r.expect_zero("superspace B soul is A0 B0", sbi.soul - a0b0);

  // Dropping the 3/2 coefficient breaks adjointness.
  const AlgebraElement fx{{}, jet(phi)};
  const AlgebraElement fy{{}, jet(psi)};
  const SymExpr broken = inner_product(fx, lie_bracket(fy, kZ)).integrand -
                         (bilinear_B(fx, fy).first + kHalf * (jet(psi, 1) * apply_A1(jet(phi)))) * jet(w);
  r.expect_true("control: perturbed B is not adjoint", !cas::is_exact(broken));
  return r;
}

CheckResult jacobi_check(int cases, unsigned seed) {
  CheckResult r{"jacobi", {}, {}};
  Draw d{std::mt19937(seed)};
  AlgebraElement jacobi_total, antisym_total;
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    const AlgebraElement x = random_element(d);
    const AlgebraElement y = random_element(d);
    const AlgebraElement z = random_element(d);
    const AlgebraElement jac =
        lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
    const AlgebraElement anti = lie_bracket(x, y) + lie_bracket(y, x);
    if (!jac.even_part.is_zero() || !jac.odd_part.is_zero() || !anti.even_part.is_zero() ||
        !anti.odd_part.is_zero()) {
      if (failures++ == 0) {
        jacobi_total = jac;
        antisym_total = anti;
      }
    }
  }
  r.expect_zero("Jacobi identity, bosonic part", jacobi_total.even_part);
  r.expect_zero("Jacobi identity, fermionic part", jacobi_total.odd_part);
  r.expect_zero("antisymmetry, bosonic part", antisym_total.even_part);
  r.expect_zero("antisymmetry, fermionic part", antisym_total.odd_part);
  r.notes.push_back(std::to_string(cases) + " random triples, " + std::to_string(failures) + " failing");

  // D^2 = dx on random superfield expressions, and the Euler operator
  // annihilates total derivatives.
  SymExpr d2_total, euler_total;
  for (int i = 0; i < 2 * cases; ++i) {
    const Parity par = parity_from_bit(d.below(2));
    const SymExpr e = random_component(d, par) + SymExpr::theta() * random_component(d, par + Parity::odd);
    const SymExpr diff = superD(e, 2) - dx(e);
    if (!diff.is_zero() && d2_total.is_zero()) d2_total = diff;
  }
  for (int i = 0; i < cases; ++i) {
    const SymExpr k = random_component(d, parity_from_bit(d.below(2)));
    for (const FieldSymbol& f : {u, v, xi, psi}) {
      const SymExpr e = cas::variational_derivative({dx(k)}, f);
      if (!e.is_zero() && euler_total.is_zero()) euler_total = e;
    }
  }
  r.expect_zero("D^2 = dx on " + std::to_string(2 * cases) + " random expressions", d2_total);
  r.expect_zero("Euler operator of " + std::to_string(cases) + " random total derivatives", euler_total);
  // Acting on the fermions as weight -1 densities breaks Jacobi.
  auto wrong_weight = [](const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = lie_bracket(a, b);
    out.odd_part += kHalf * (dx(a.even_part) * b.odd_part) - kHalf * (a.odd_part * dx(b.even_part));
    out.odd_part -= dx(a.even_part) * b.odd_part - a.odd_part * dx(b.even_part);
    return out;
  };
  const AlgebraElement broken = wrong_weight(kX, wrong_weight(kY, kZ)) + wrong_weight(kY, wrong_weight(kZ, kX)) +
                                wrong_weight(kZ, wrong_weight(kX, kY));
  r.expect_nonzero("control: fermions as weight -1 densities", broken.even_part + SymExpr::theta() * broken.odd_part);
  return r;
}

}  // namespace shs::hs
