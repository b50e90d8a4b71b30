#include "doctest.h"

#include <cmath>
#include <random>

#include "nc/bogoliubov.hpp"
#include "nc/symbol_text.hpp"

using namespace nc;

namespace {

BogoliubovTransform random_scalar_transform(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  BogoliubovTransform t;
  t.m = 1;
  for (ComplexMatrix* b : {&t.alpha, &t.beta, &t.gamma, &t.delta}) {
    *b = ComplexMatrix(1, 1);
    (*b)(0, 0) = cdouble(u(rng), u(rng));
  }
  return t;
}

}  // namespace

TEST_CASE("identity transform has vanishing residuals") {
  const BogoliubovTransform t = BogoliubovTransform::identity(3);
  for (Statistics stat : {Statistics::bose, Statistics::fermi}) {
    const AlgebraResidual r = algebra_residual(t, stat);
    CHECK(r.max_oracle() == 0.0);
    CHECK(r.max_printed() == 0.0);
  }
}

TEST_CASE("one-mode squeeze preserves the bosonic algebra") {
  const BogoliubovTransform t = BogoliubovTransform::squeeze(0.3);
  const AlgebraResidual r = algebra_residual(t, Statistics::bose);
  // [b, b^+] - 1 = cosh^2 - sinh^2 - 1 = 0
  CHECK(r.max_oracle() <= 1e-15);
  // the printed pair: alpha delta - beta gamma^T = I holds ...
  CHECK(max_abs(r.printed_unit) <= 1e-15);
  // ... while alpha gamma + beta delta^T = sinh(2r), not zero
  CHECK(std::abs(r.printed_cross(0, 0) - cdouble(std::sinh(0.6))) <= 1e-15);
  CHECK(r.max_printed() > 0.5);
}

TEST_CASE("composition of residual-free transforms stays residual-free") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const BogoliubovTransform t1 = BogoliubovTransform::squeeze(u(rng));
    const BogoliubovTransform t2 = BogoliubovTransform::squeeze(u(rng));
    const BogoliubovTransform t = compose(t2, t1);
    CHECK(algebra_residual(t, Statistics::bose).max_oracle() <= 1e-10);
  }
}

TEST_CASE("q residual conditions hold on the identity for every q") {
  for (double q : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const QAlgebraResidual r =
        q_algebra_residual(BogoliubovTransform::identity(1), q);
    CHECK(r.max_oracle() == 0.0);
    CHECK(r.max_printed() == 0.0);
  }
}

TEST_CASE("q = -1 oracle reduces to the bosonic pair residual") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const BogoliubovTransform t = random_scalar_transform(rng);
    const QAlgebraResidual qr = q_algebra_residual(t, -1.0);
    const AlgebraResidual br = algebra_residual(t, Statistics::bose);
    CHECK(std::abs(qr.unit - br.pair_bracket(0, 0)) <= 1e-15);
    // for scalars the a^+a and ladder-square coefficients collapse
    CHECK(std::abs(qr.number) <= 1e-15);
    CHECK(std::abs(qr.lowering) <= 1e-15);
    CHECK(std::abs(qr.raising) <= 1e-15);
  }
}

TEST_CASE("scalar q conditions: oracle and printed forms are linearly related") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    const BogoliubovTransform t = random_scalar_transform(rng);
    const double q = 0.5;
    const QAlgebraResidual r = q_algebra_residual(t, q);
    CHECK(std::abs(r.unit - r.cond_unit) <= 1e-15);
    CHECK(std::abs(r.number - (r.cond_number - q * r.cond_unit)) <= 1e-14);
    CHECK(std::abs(r.lowering - r.cond_lower) <= 1e-15);
    CHECK(std::abs(r.raising - r.cond_raise) <= 1e-15);
  }
}

TEST_CASE("q residual requires scalar blocks") {
  CHECK_THROWS_AS(q_algebra_residual(BogoliubovTransform::identity(2), 0.5),
                  dimension_error);
}

TEST_CASE("apply_transform: identity leaves the modes unchanged") {
  const FockBasis basis = FockBasis::bose(1, 8);
  const ModeOperators ops = mode_operators(basis, 0);
  const TransformedModes out = apply_transform(
      BogoliubovTransform::identity(1), {{ops.a, ops.a_dag}}, Statistics::bose);
  CHECK(max_abs_diff(out.b[0].mat, ops.a.mat) == 0.0);
  CHECK(max_abs_diff(out.b_dag[0].mat, ops.a_dag.mat) == 0.0);
  CHECK(out.adjoint_residual == 0.0);
}

TEST_CASE("apply_transform: squeeze at cutoff 20 keeps the interior algebra") {
  const FockBasis basis = FockBasis::bose(1, 20);
  const ModeOperators ops = mode_operators(basis, 0);
  const BogoliubovTransform t = BogoliubovTransform::squeeze(0.3);
  REQUIRE(t.adjoint_consistent());
  const TransformedModes out =
      apply_transform(t, {{ops.a, ops.a_dag}}, Statistics::bose);
  CHECK(out.commutator_residual <= 1e-8);
  CHECK(out.adjoint_residual <= 1e-12);
}

TEST_CASE("fermi one-mode rotation preserves the anticommutator exactly") {
  const FockBasis basis({Mode{Statistics::fermi, 2}});
  const ModeOperators ops = mode_operators(basis, 0);
  const double angle = 0.4;
  BogoliubovTransform t;
  t.m = 1;
  t.alpha = ComplexMatrix(1, 1);
  t.beta = ComplexMatrix(1, 1);
  t.gamma = ComplexMatrix(1, 1);
  t.delta = ComplexMatrix(1, 1);
  t.alpha(0, 0) = std::cos(angle);
  t.delta(0, 0) = std::cos(angle);
  t.beta(0, 0) = std::sin(angle);
  t.gamma(0, 0) = std::sin(angle);
  REQUIRE(t.adjoint_consistent());
  const TransformedModes out =
      apply_transform(t, {{ops.a, ops.a_dag}}, Statistics::fermi, 0);
  const ComplexMatrix rel = anticommutator(out.b[0].mat, out.b_dag[0].mat);
  CHECK(max_abs_diff(rel, ComplexMatrix::identity(2)) <= 1e-15);
}

TEST_CASE("apply_transform rejects mixed bases") {
  const FockBasis b1 = FockBasis::bose(1, 6);
  const FockBasis b2 = FockBasis::bose(1, 8);
  const ModeOperators o1 = mode_operators(b1, 0);
  const ModeOperators o2 = mode_operators(b2, 0);
  CHECK_THROWS_AS(apply_transform(BogoliubovTransform::identity(2),
                                  {{o1.a, o1.a_dag}, {o2.a, o2.a_dag}},
                                  Statistics::bose),
                  dimension_error);
}

TEST_CASE("theta mode commutators: canonical case") {
  const Bivector zero(2);
  const ThetaModeTable table = theta_mode_commutators(zero, zero);
  CHECK(max_abs(table.aa) == 0.0);
  CHECK(max_abs_diff(table.a_adag, ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("theta mode commutators match the closed form") {
  // [a_i, a_j] = (i/2)(theta_x - theta_p)_ij
  // [a_i, a_j^+] = (i/2)(theta_x + theta_p)_ij + delta_ij
  const double b_field = 2.0;
  Bivector tx(2), tp(2);
  tx.set(0, 1, 1.0 / b_field);
  tp.set(0, 1, b_field);
  const ThetaModeTable table = theta_mode_commutators(tx, tp);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const cdouble aa_expected(0.0, 0.5 * (tx(i, j) - tp(i, j)));
      const cdouble ad_expected =
          cdouble(0.0, 0.5 * (tx(i, j) + tp(i, j))) + (i == j ? 1.0 : 0.0);
      CHECK(std::abs(table.aa(i, j) - aa_expected) <= 1e-15);
      CHECK(std::abs(table.a_adag(i, j) - ad_expected) <= 1e-15);
    }
}

TEST_CASE("theta mode table is linear in the deformation blocks") {
  Bivector tx(2), tp(2);
  tx.set(0, 1, 0.25);
  tp.set(0, 1, 0.5);
  const ThetaModeTable t1 = theta_mode_commutators(tx, tp);
  const ThetaModeTable t2 =
      theta_mode_commutators(tx.scaled(2.0), tp.scaled(2.0));
  // subtracting the canonical part, doubling theta doubles the table
  const ThetaModeTable base = theta_mode_commutators(Bivector(2), Bivector(2));
  const ComplexMatrix lhs = t2.a_adag - base.a_adag;
  ComplexMatrix rhs = t1.a_adag - base.a_adag;
  rhs *= 2.0;
  CHECK(max_abs_diff(lhs, rhs) <= 1e-15);
  ComplexMatrix aa_twice = t1.aa;
  aa_twice *= 2.0;
  CHECK(max_abs_diff(t2.aa, aa_twice) <= 1e-15);
}

TEST_CASE("adjoint consistency flag") {
  BogoliubovTransform t = BogoliubovTransform::squeeze(0.2);
  CHECK(t.adjoint_consistent());
  t.gamma(0, 0) += cdouble(0.0, 1e-6);
  CHECK(!t.adjoint_consistent());
}
