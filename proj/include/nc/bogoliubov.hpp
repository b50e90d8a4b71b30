#pragma once

// Linear canonical (Bogoliubov) transforms b = alpha a + beta a^+,
// b^+ = gamma a + delta a^+. Preservation of the algebra is always decided
// by expanding the transformed (anti)commutators from the base algebra; the
// block conditions as printed in the source conventions are evaluated
// alongside and reported, never asserted.

#include <vector>

#include "nc/bivector.hpp"
#include "nc/fock_basis.hpp"
#include "nc/phase_poly.hpp"

namespace nc {

struct BogoliubovTransform {
  int m = 0;
  ComplexMatrix alpha, beta, gamma, delta;

  static BogoliubovTransform identity(int m);
  // One-mode squeeze alpha = delta = cosh r, beta = gamma = sinh r.
  static BogoliubovTransform squeeze(double r);

  bool adjoint_consistent(double tol = 1e-12) const;
};

// T2 after T1 (expand b'' in terms of the original ladder pair).
BogoliubovTransform compose(const BogoliubovTransform& t2,
                            const BogoliubovTransform& t1);

struct AlgebraResidual {
  // From the base algebra: bracket(b_i, b_j^+) - delta_ij and bracket(b_i, b_j),
  // where bracket is the commutator (bose) or anticommutator (fermi).
  ComplexMatrix pair_bracket;  // alpha delta^T -+ beta gamma^T - I
  ComplexMatrix same_bracket;  // alpha beta^T -+ beta alpha^T
  // The printed block conditions, evaluated verbatim.
  ComplexMatrix printed_unit;   // alpha delta - beta gamma^T - I
  ComplexMatrix printed_cross;  // alpha gamma + beta delta^T
  double max_oracle() const;
  double max_printed() const;
};

AlgebraResidual algebra_residual(const BogoliubovTransform& t, Statistics stat);

// One-mode q-deformed residuals. The oracle expands b b^+ + q b^+ b through
// a a^+ = 1 - q a^+ a and reports the coefficients of 1, a^+a, a^2, a^+2
// that must vanish; `cond_*` are the printed scalar conditions.
struct QAlgebraResidual {
  cdouble unit;        // alpha delta + q gamma beta - 1
  cdouble number;      // coefficient of a^+ a
  cdouble lowering;    // coefficient of a^2
  cdouble raising;     // coefficient of a^+^2
  cdouble cond_unit;   // alpha delta + q gamma beta - 1
  cdouble cond_number; // beta gamma + q delta alpha - q
  cdouble cond_lower;  // alpha gamma + q gamma alpha
  cdouble cond_raise;  // beta delta + q delta beta
  double max_oracle() const;
  double max_printed() const;
};

QAlgebraResidual q_algebra_residual(const BogoliubovTransform& t, double q);

struct TransformedModes {
  std::vector<OperatorMatrix> b, b_dag;
  // max over (i, j) of the interior deviation of bracket(b_i, b_j^+) from
  // delta_ij and of bracket(b_i, b_j) from zero.
  double commutator_residual = 0.0;
  double adjoint_residual = 0.0;  // max |b^+ - (b)^+|
};

TransformedModes apply_transform(
    const BogoliubovTransform& t,
    const std::vector<std::pair<OperatorMatrix, OperatorMatrix>>& mode_pairs,
    Statistics stat, int margin = 2);

// Exact mode commutators for the theta-deformed ladder a_i = (x_i + i p_i)/sqrt2
// built on [x,x] = i theta_x, [p,p] = i theta_p, [x_i, p_j] = i delta_ij.
// Both tables are constants; computed through the phase-space algebra.
struct ThetaModeTable {
  ComplexMatrix aa;      // [a_i, a_j]
  ComplexMatrix a_adag;  // [a_i, a_j^+]
};

ThetaModeTable theta_mode_commutators(const Bivector& theta_x,
                                      const Bivector& theta_p);

}  // namespace nc
