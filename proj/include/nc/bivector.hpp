#pragma once

// Constant antisymmetric bivector over a fixed set of phase-space
// generators; entry (a, b) is the coefficient in [z^a, z^b] = i * Pi(a, b).
// Antisymmetry is enforced structurally: set() writes both triangles.

#include <vector>

#include "nc/errors.hpp"

namespace nc {

class Bivector {
 public:
  explicit Bivector(int n);

  // n, then the n(n-1)/2 upper-triangle entries row-major.
  static Bivector from_upper(int n, const std::vector<double>& upper);

  // 2n generators ordered (x1..xn, p1..pn) with [x_i, p_j] = i delta_ij.
  static Bivector canonical(int nmodes);

  // Combined phase-space bivector: [x,x] = i theta_x, [p,p] = i theta_p,
  // and optionally [x_i, p_j] = i delta_ij.
  static Bivector phase_space(const Bivector& theta_x, const Bivector& theta_p,
                              bool canonical_pairing = true);

  int size() const { return n_; }
  double operator()(int a, int b) const { return e_[idx(a, b)]; }
  void set(int a, int b, double v);

  bool is_zero() const;
  // Inverse as a plain matrix; throws singular_error unless
  // Pi * Pi^{-1} = I holds to 1e-12.
  Bivector inverse() const;

  Bivector scaled(double s) const;

 private:
  std::size_t idx(int a, int b) const;
  int n_;
  std::vector<double> e_;
};

}  // namespace nc
