#include "doctest.h"

#include <random>

#include "nc/gauge.hpp"
#include "nc/weyl.hpp"
#include "oracles.hpp"

using namespace nc;
using namespace nc::testing;

TEST_CASE("index/occupation bijection is consistent both ways") {
  const FockBasis basis({Mode{Statistics::bose, 3},
                         Mode{Statistics::fermi, 2},
                         Mode{Statistics::bose, 4}});
  CHECK(basis.dim() == 24);
  for (int idx = 0; idx < basis.dim(); ++idx)
    CHECK(basis.index_of(basis.occupation_of(idx)) == idx);
  CHECK_THROWS_AS(basis.occupation_of(24), dimension_error);
  CHECK_THROWS_AS((FockBasis({Mode{Statistics::fermi, 3}})), dimension_error);
}

TEST_CASE("bose ladder commutator is the identity away from the edge") {
  const FockBasis basis = FockBasis::bose(1, 6);
  const ModeOperators ops = mode_operators(basis, 0);
  const ComplexMatrix comm = commutator(ops.a.mat, ops.a_dag.mat);
  // interior occupations <= 4
  const std::vector<int> keep = interior_indices(basis, 2);
  CHECK(interior_max_abs_diff(comm, ComplexMatrix::identity(6), keep) <= 1e-14);
  // the (5,5) entry is the truncation artifact
  CHECK(std::abs(comm(5, 5) - cdouble(-5.0)) <= 1e-14);
}

TEST_CASE("fermi ladder is exact: a^2 = 0 and {a, a+} = I") {
  const FockBasis basis({Mode{Statistics::fermi, 2}});
  const ModeOperators ops = mode_operators(basis, 0);
  CHECK(max_abs(matmul(ops.a.mat, ops.a.mat)) == 0.0);
  CHECK(max_abs_diff(anticommutator(ops.a.mat, ops.a_dag.mat),
                     ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("quadratures are hermitian with canonical commutator inside") {
  const FockBasis basis = FockBasis::bose(1, 10);
  const ModeOperators ops = mode_operators(basis, 0);
  CHECK(ops.x.hermitian_within(1e-14));
  CHECK(ops.p.hermitian_within(1e-14));
  const ComplexMatrix comm = commutator(ops.x.mat, ops.p.mat);
  ComplexMatrix i_ident = ComplexMatrix::identity(10);
  i_ident *= cdouble(0.0, 1.0);
  const std::vector<int> keep = interior_indices(basis, 2);
  CHECK(interior_max_abs_diff(comm, i_ident, keep) <= 1e-14);
  CHECK_THROWS_AS(mode_operators(basis, 1), dimension_error);
}

TEST_CASE("interior block margins") {
  const FockBasis basis = FockBasis::bose(1, 6);
  const ModeOperators ops = mode_operators(basis, 0);
  const OperatorMatrix unchanged = interior_block(ops.x, 0);
  CHECK(max_abs_diff(unchanged.mat, ops.x.mat) == 0.0);

  const OperatorMatrix once = interior_block(ops.x, 2);
  const OperatorMatrix twice = interior_block(once, 2);
  CHECK(max_abs_diff(once.mat, twice.mat) == 0.0);  // idempotent

  CHECK_THROWS_AS(interior_indices(basis, 8), dimension_error);
}

TEST_CASE("degree-1 quantization is the mode map") {
  const FockBasis basis = FockBasis::bose(2, 5);
  const PhasePoly x1 = PhasePoly::generator(4, 0);
  const OperatorMatrix w = weyl_quantize(x1, basis);
  CHECK(max_abs_diff(w.mat, mode_operators(basis, 0).x.mat) == 0.0);
  CHECK(max_abs_diff(weyl_quantize(PhasePoly::constant(4, 1.0), basis).mat,
                     ComplexMatrix::identity(basis.dim())) == 0.0);
}

TEST_CASE("W[x p] averages the two orderings") {
  const FockBasis basis = FockBasis::bose(1, 8);
  const ModeOperators ops = mode_operators(basis, 0);
  PhasePoly xp = PhasePoly::generator(2, 0) * PhasePoly::generator(2, 1);
  const OperatorMatrix w = weyl_quantize(xp, basis);
  ComplexMatrix expected = matmul(ops.x.mat, ops.p.mat) +
                           matmul(ops.p.mat, ops.x.mat);
  expected *= 0.5;
  CHECK(max_abs_diff(w.mat, expected) <= 1e-14);
}

TEST_CASE("quantization agrees with the full-multiset symmetrization oracle") {
  std::mt19937_64 rng(211);
  const FockBasis basis = FockBasis::bose(2, 4);
  for (int trial = 0; trial < 12; ++trial) {
    const PhasePoly f = random_poly(rng, 4, 3, 3);
    const OperatorMatrix w = weyl_quantize(f, basis);
    const ComplexMatrix oracle = symmetrized_product_oracle(f, basis);
    CHECK(max_abs_diff(w.mat, oracle) <= 1e-12);
  }
}

TEST_CASE("W is linear and sends real symbols to hermitian operators") {
  std::mt19937_64 rng(223);
  const FockBasis basis = FockBasis::bose(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    PhasePoly f(2), g(2);
    // real coefficients
    for (int t = 0; t < 4; ++t) {
      Monomial m{0, 0};
      std::uniform_int_distribution<int> deg(0, 3);
      std::uniform_int_distribution<int> pick(0, 1);
      int d = deg(rng);
      for (int k = 0; k < d; ++k) m[pick(rng)] += 1;
      f.add_term(m, random_dyadic(rng));
      g.add_term(m, random_dyadic(rng));
    }
    CHECK(weyl_quantize(f, basis).hermitian_within(1e-12));
    const cdouble s(0.5, 0.25);
    const OperatorMatrix lhs = weyl_quantize(s * f + g, basis);
    ComplexMatrix rhs = weyl_quantize(f, basis).mat;
    rhs *= s;
    rhs += weyl_quantize(g, basis).mat;
    CHECK(max_abs_diff(lhs.mat, rhs) <= 1e-12);
  }
}

TEST_CASE("composition law residual on the interior block") {
  // W[f*g] = W[f] W[g] for polynomial symbols is exact on a block whose
  // margin covers the total degree; the residual is rounding-level dust at
  // every cutoff and comfortably below 1e-8 at cutoff 24.
  const Bivector pi = Bivector::canonical(1);
  const PhasePoly f = PhasePoly::generator(2, 0, 2);
  const PhasePoly g = PhasePoly::generator(2, 1, 2);
  const PhasePoly fg = star_product(f, g, pi);
  const int margin = 4;  // total degree of the symbols involved
  for (int cutoff : {8, 12, 16, 24}) {
    const FockBasis basis = FockBasis::bose(1, cutoff);
    const ComplexMatrix lhs = weyl_quantize(fg, basis).mat;
    const ComplexMatrix rhs =
        matmul(weyl_quantize(f, basis).mat, weyl_quantize(g, basis).mat);
    const std::vector<int> keep = interior_indices(basis, margin);
    const double residual = interior_max_abs_diff(lhs, rhs, keep);
    CHECK(residual <= 1e-8);
  }
}

TEST_CASE("composition law for random degree-2 symbols at cutoff 16") {
  std::mt19937_64 rng(227);
  const Bivector pi = Bivector::canonical(1);
  const FockBasis basis = FockBasis::bose(1, 16);
  const std::vector<int> keep = interior_indices(basis, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const PhasePoly f = random_poly(rng, 2, 2, 3);
    const PhasePoly g = random_poly(rng, 2, 2, 3);
    const ComplexMatrix lhs = weyl_quantize(star_product(f, g, pi), basis).mat;
    const ComplexMatrix rhs =
        matmul(weyl_quantize(f, basis).mat, weyl_quantize(g, basis).mat);
    CHECK(interior_max_abs_diff(lhs, rhs, keep) <= 1e-10);
  }
}

TEST_CASE("theta-adapted coordinates reproduce the bivector commutators") {
  Bivector theta(2);
  theta.set(0, 1, 0.8);
  const ThetaAdaptedRep rep = theta_adapted_coordinates(theta, 12);
  const std::vector<int> keep = interior_indices(rep.basis, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const ComplexMatrix comm = commutator(rep.coords[i].mat, rep.coords[j].mat);
      ComplexMatrix expected = ComplexMatrix::identity(rep.basis.dim());
      expected *= cdouble(0.0, theta(i, j));
      CHECK(interior_max_abs_diff(comm, expected, keep) <= 1e-8);
    }
}

TEST_CASE("fermi sector identities hold with zero truncation error") {
  const FockBasis basis({Mode{Statistics::bose, 4}, Mode{Statistics::fermi, 2}});
  const ModeOperators f = mode_operators(basis, 1);
  CHECK(max_abs(matmul(f.a.mat, f.a.mat)) == 0.0);
  CHECK(max_abs_diff(anticommutator(f.a.mat, f.a_dag.mat),
                     ComplexMatrix::identity(basis.dim())) == 0.0);
}

TEST_CASE("symbol/basis mismatch raises") {
  const FockBasis basis = FockBasis::bose(2, 4);
  CHECK_THROWS_AS(weyl_quantize(PhasePoly::generator(2, 0), basis),
                  dimension_error);
}
