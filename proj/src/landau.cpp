#include "nc/landau.hpp"

#include <algorithm>
#include <cmath>

#include "nc/bivector.hpp"
#include "nc/star_product.hpp"

namespace nc {

LandauSystem landau_system(double b_field, int cutoff) {
  if (b_field <= 0.0) throw domain_error("magnetic field must be positive");
  if (cutoff < 4) throw dimension_error("landau_system needs cutoff >= 4");

  LandauSystem sys{b_field, cutoff, FockBasis::bose(1, cutoff), {}, {}, {}, {}, {}};
  const ModeOperators ops = mode_operators(sys.basis, 0);
  sys.a = ops.a.mat;
  sys.a_dag = ops.a_dag.mat;

  // a = sqrt(B/2)(x^1 + i x^2)  =>  x^1 = (a + a^+)/sqrt(2B),
  // x^2 = -i (a - a^+)/sqrt(2B); then [x^1, x^2] = (i/B) I on the interior.
  const double scale = 1.0 / std::sqrt(2.0 * b_field);
  sys.x1 = sys.a + sys.a_dag;
  sys.x1 *= scale;
  sys.x2 = sys.a - sys.a_dag;
  sys.x2 *= cdouble(0.0, -scale);

  ComplexMatrix h = matmul(sys.a_dag, sys.a);
  h += 0.5 * ComplexMatrix::identity(cutoff);
  h *= b_field;
  sys.h = std::move(h);
  return sys;
}

std::vector<double> landau_spectrum(const LandauSystem& sys, int margin) {
  const std::vector<int> keep = interior_indices(sys.basis, margin);
  const ComplexMatrix h_int = restrict_to(sys.h, keep);
  return hermitian_eigenvalues(h_int);
}

cdouble braiding_phase(double theta, int cutoff, int margin) {
  if (cutoff < 4) throw dimension_error("braiding_phase needs cutoff >= 4");
  if (margin < 0) margin = cutoff / 2;

  const FockBasis basis = FockBasis::bose(1, cutoff);
  const ModeOperators ops = mode_operators(basis, 0);
  const double root = std::sqrt(std::abs(theta));
  const double sign = theta < 0.0 ? -1.0 : 1.0;
  // [x1, x2] = i theta via the canonical pair
  ComplexMatrix x1 = ops.x.mat;
  x1 *= root;
  ComplexMatrix x2 = ops.p.mat;
  x2 *= sign * root;

  const cdouble iu(0.0, 1.0);
  const ComplexMatrix g = matmul(matmul(expm(iu * x1), expm(iu * x2)),
                                 matmul(expm(-iu * x1), expm(-iu * x2)));

  const std::vector<int> keep = interior_indices(basis, margin);
  cdouble mean = 0.0;
  for (int k : keep) mean += g(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  mean /= static_cast<double>(keep.size());

  ComplexMatrix scalar(cutoff, cutoff);
  for (std::size_t i = 0; i < scalar.rows(); ++i) scalar(i, i) = mean;
  const double deviation = interior_max_abs_diff(g, scalar, keep);
  if (deviation > 0.05)
    throw truncation_error(
        "braiding operator is not scalar on the interior; raise the cutoff",
        2 * cutoff);
  return mean;
}

PhasePoly shifted_commutator(double theta, double b_field) {
  // two coordinates x1, x2 with [x1, x2] = i theta
  Bivector pi(2);
  pi.set(0, 1, theta);

  const PhasePoly x1 = PhasePoly::generator(2, 0);
  const PhasePoly x2 = PhasePoly::generator(2, 1);
  // A_1 = (B/2) eps_12 x^2 = (B/2) x2,  A_2 = (B/2) eps_21 x^1 = -(B/2) x1
  PhasePoly a1 = x2;
  a1 *= 0.5 * b_field;
  PhasePoly a2 = x1;
  a2 *= -0.5 * b_field;
  // x'^i = x^i + i theta eps^{ij} A_j
  PhasePoly shifted1 = x1 + cdouble(0.0, theta) * a2;
  PhasePoly shifted2 = x2 - cdouble(0.0, theta) * a1;
  return moyal_bracket(shifted1, shifted2, pi);
}

}  // namespace nc
