#include "doctest.h"

#include <random>

#include "nc/star_product.hpp"
#include "oracles.hpp"

using namespace nc;
using namespace nc::testing;

namespace {

// two coordinates with [x1, x2] = i theta
Bivector theta2(double theta) {
  Bivector pi(2);
  pi.set(0, 1, theta);
  return pi;
}

}  // namespace

TEST_CASE("coordinate commutator reproduces i theta") {
  const double theta = 0.5;
  const Bivector pi = theta2(theta);
  const PhasePoly x1 = PhasePoly::generator(2, 0);
  const PhasePoly x2 = PhasePoly::generator(2, 1);
  const PhasePoly br = star_product(x1, x2, pi) - star_product(x2, x1, pi);
  CHECK(br.terms().size() == 1);
  CHECK(br.constant_term() == cdouble(0.0, theta));
}

TEST_CASE("constants are the unit of the star algebra") {
  std::mt19937_64 rng(7);
  const Bivector pi = random_bivector(rng, 4);
  const PhasePoly f = random_poly(rng, 4, 4, 6);
  const PhasePoly one = PhasePoly::constant(4, 1.0);
  CHECK(max_coeff_diff(star_product(f, one, pi), f) == 0.0);
  CHECK(max_coeff_diff(star_product(one, f, pi), f) == 0.0);
}

TEST_CASE("terminating series on squares, exact expansion") {
  // (x1)^2 * (x2)^2 = x1^2 x2^2 + 2 i theta x1 x2 - theta^2 / 2
  const double theta = 0.5;
  const Bivector pi = theta2(theta);
  const PhasePoly f = PhasePoly::generator(2, 0, 2);
  const PhasePoly g = PhasePoly::generator(2, 1, 2);
  const PhasePoly s = star_product(f, g, pi);
  CHECK(s.coeff(Monomial{2, 2}) == cdouble(1.0));
  CHECK(s.coeff(Monomial{1, 1}) == cdouble(0.0, 2.0 * theta));
  CHECK(s.constant_term() == cdouble(-theta * theta / 2.0));
  CHECK(s.terms().size() == 3);
}

TEST_CASE("star agrees with the brute-force bidifferential oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Bivector pi = random_bivector(rng, 4);
    const PhasePoly f = random_poly(rng, 4, 3, 4);
    const PhasePoly g = random_poly(rng, 4, 3, 4);
    CHECK(max_coeff_diff(star_product(f, g, pi), star_reference(f, g, pi)) <=
          1e-13);
  }
}

TEST_CASE("pi = 0 degenerates to the pointwise product") {
  std::mt19937_64 rng(3);
  const Bivector zero(4);
  const PhasePoly f = random_poly(rng, 4, 4, 5);
  const PhasePoly g = random_poly(rng, 4, 4, 5);
  CHECK(max_coeff_diff(star_product(f, g, zero), f * g) == 0.0);
  CHECK(moyal_bracket(f, g, zero).is_zero());
}

TEST_CASE("moyal bracket of a coordinate is the theta derivation") {
  // [x1, f] = i theta^{1b} d_b f, here [x1, (x2)^2] = 2 i theta x2
  const double theta = 0.75;
  const Bivector pi = theta2(theta);
  const PhasePoly x1 = PhasePoly::generator(2, 0);
  const PhasePoly f = PhasePoly::generator(2, 1, 2);
  const PhasePoly br = moyal_bracket(x1, f, pi);
  CHECK(br.terms().size() == 1);
  CHECK(br.coeff(Monomial{0, 1}) == cdouble(0.0, 2.0 * theta));
}

TEST_CASE("moyal bracket is antisymmetric: [f, f] = 0") {
  std::mt19937_64 rng(5);
  const Bivector pi = random_bivector(rng, 4);
  const PhasePoly f = random_poly(rng, 4, 4, 6);
  CHECK(moyal_bracket(f, f, pi).is_zero());
}

TEST_CASE("jacobi identity closes for random cubics") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const Bivector pi = random_bivector(rng, 4);
    const PhasePoly f = random_poly(rng, 4, 3, 4);
    const PhasePoly g = random_poly(rng, 4, 3, 4);
    const PhasePoly h = random_poly(rng, 4, 3, 4);
    PhasePoly acc = moyal_bracket(f, moyal_bracket(g, h, pi), pi);
    acc += moyal_bracket(g, moyal_bracket(h, f, pi), pi);
    acc += moyal_bracket(h, moyal_bracket(f, g, pi), pi);
    CHECK(max_coeff_diff(acc, PhasePoly(4)) <= 1e-12);
  }
}

TEST_CASE("associativity over random quartic triples") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Bivector pi = random_bivector(rng, 4);
    const PhasePoly f = random_poly(rng, 4, 4, 4);
    const PhasePoly g = random_poly(rng, 4, 4, 4);
    const PhasePoly h = random_poly(rng, 4, 4, 4);
    const PhasePoly lhs = star_product(star_product(f, g, pi), h, pi);
    const PhasePoly rhs = star_product(f, star_product(g, h, pi), pi);
    CHECK(max_coeff_diff(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("star is linear in each argument") {
  std::mt19937_64 rng(19);
  const Bivector pi = random_bivector(rng, 4);
  const PhasePoly f = random_poly(rng, 4, 3, 4);
  const PhasePoly g = random_poly(rng, 4, 3, 4);
  const PhasePoly h = random_poly(rng, 4, 3, 4);
  const cdouble s(0.5, -1.0);
  const PhasePoly lhs = star_product(s * f + g, h, pi);
  const PhasePoly rhs = s * star_product(f, h, pi) + star_product(g, h, pi);
  CHECK(max_coeff_diff(lhs, rhs) <= 1e-13);
}

TEST_CASE("coordinate brackets act as derivations of the star algebra") {
  // [x^a, f*g] = [x^a, f]*g + f*[x^a, g]
  std::mt19937_64 rng(23);
  const Bivector pi = random_bivector(rng, 4);
  const PhasePoly x = PhasePoly::generator(4, 1);
  const PhasePoly f = random_poly(rng, 4, 3, 4);
  const PhasePoly g = random_poly(rng, 4, 3, 4);
  const PhasePoly lhs = moyal_bracket(x, star_product(f, g, pi), pi);
  const PhasePoly rhs = star_product(moyal_bracket(x, f, pi), g, pi) +
                        star_product(f, moyal_bracket(x, g, pi), pi);
  CHECK(max_coeff_diff(lhs, rhs) <= 1e-12);
}

TEST_CASE("canonical block reproduces [x, p] = i") {
  const Bivector pi = Bivector::canonical(1);  // generators (x1, p1)
  const PhasePoly x = PhasePoly::generator(2, 0);
  const PhasePoly p = PhasePoly::generator(2, 1);
  CHECK(moyal_bracket(x, p, pi).constant_term() == cdouble(0.0, 1.0));
  CHECK(moyal_bracket(x, x, pi).is_zero());
  CHECK(moyal_bracket(p, p, pi).is_zero());
  // poisson_bracket(x, p) = 1 for the canonical pair
  CHECK(poisson_bracket(x, p, pi).constant_term() == cdouble(1.0));
}

TEST_CASE("momentum block carries the inverse of theta") {
  // [p_i, p_j] = i (theta^{-1})_ij when so configured
  Bivector theta(2);
  theta.set(0, 1, 0.5);
  const Bivector theta_inv = theta.inverse();
  const Bivector pi = Bivector::phase_space(theta, theta_inv, true);
  const PhasePoly p1 = PhasePoly::generator(4, 2);
  const PhasePoly p2 = PhasePoly::generator(4, 3);
  const PhasePoly br = moyal_bracket(p1, p2, pi);
  CHECK(br.constant_term() == cdouble(0.0, theta_inv(0, 1)));
  CHECK(theta_inv(0, 1) == -2.0);

  // constant bivector: the mixed Jacobi residual vanishes identically
  const PhasePoly x1 = PhasePoly::generator(4, 0);
  PhasePoly acc = moyal_bracket(x1, moyal_bracket(p1, p2, pi), pi);
  acc += moyal_bracket(p1, moyal_bracket(p2, x1, pi), pi);
  acc += moyal_bracket(p2, moyal_bracket(x1, p1, pi), pi);
  CHECK(acc.is_zero());
}

TEST_CASE("linear symbols: moyal bracket equals i times the poisson bracket") {
  std::mt19937_64 rng(29);
  const Bivector pi = random_bivector(rng, 4);
  const PhasePoly f = random_poly(rng, 4, 1, 3);
  const PhasePoly g = random_poly(rng, 4, 1, 3);
  const PhasePoly lhs = moyal_bracket(f, g, pi);
  PhasePoly rhs = poisson_bracket(f, g, pi);
  rhs *= cdouble(0.0, 1.0);
  CHECK(max_coeff_diff(lhs, rhs) <= 1e-15);
}

TEST_CASE("scaled-bivector limit recovers the poisson bracket at O(s^2)") {
  std::mt19937_64 rng(31);
  const Bivector pi = random_bivector(rng, 4);
  const PhasePoly f = random_poly(rng, 4, 4, 5);
  const PhasePoly g = random_poly(rng, 4, 4, 5);
  const PhasePoly pb = poisson_bracket(f, g, pi);
  double previous = 0.0;
  int step = 0;
  for (double s : {0.5, 0.25}) {
    PhasePoly scaled = moyal_bracket(f, g, pi.scaled(s));
    scaled *= cdouble(1.0, 0.0) / cdouble(0.0, s);
    const double residual = max_coeff_diff(scaled, pb);
    if (step > 0 && previous > 1e-14) {
      // residual is O(s^2): halving s divides it by ~4
      CHECK(residual <= previous / 3.0);
    }
    previous = residual;
    ++step;
  }
}

TEST_CASE("degenerate bivectors are usable, inverse requests fail") {
  Bivector pi(4);  // zero, hence singular
  CHECK_THROWS_AS(pi.inverse(), singular_error);
  Bivector odd(3);
  odd.set(0, 1, 1.0);
  CHECK_THROWS_AS(odd.inverse(), singular_error);
  // but the star algebra itself is fine with it
  const PhasePoly f = PhasePoly::generator(4, 0);
  const PhasePoly g = PhasePoly::generator(4, 2);
  CHECK(moyal_bracket(f, g, pi).is_zero());
}

TEST_CASE("generator mismatch raises a dimension error") {
  const Bivector pi(4);
  const PhasePoly f(4);
  const PhasePoly g(2);
  CHECK_THROWS_AS(star_product(f, g, pi), dimension_error);
}
