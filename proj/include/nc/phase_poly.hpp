#pragma once

// Multivariate polynomial symbols with complex coefficients over an indexed
// generator set. Terms live in a std::map keyed by the exponent multi-index,
// so iteration order (and hence rendering and golden files) is the
// lexicographic canonical order. Exact zeros are never stored.

#include <complex>
#include <map>
#include <vector>

#include "nc/errors.hpp"

namespace nc {

using cdouble = std::complex<double>;
using Monomial = std::vector<int>;

class PhasePoly {
 public:
  explicit PhasePoly(int generators);

  static PhasePoly constant(int generators, cdouble c);
  static PhasePoly generator(int generators, int g, int power = 1);

  int generators() const { return gens_; }
  const std::map<Monomial, cdouble>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  cdouble coeff(const Monomial& m) const;
  cdouble constant_term() const;

  // Accumulate c into the monomial m; removes the term if it cancels to an
  // exact complex zero.
  void add_term(const Monomial& m, cdouble c);

  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  PhasePoly& operator*=(cdouble s);

  PhasePoly derivative(int g) const;

  // Drop every coefficient of magnitude <= tol (used for display; the
  // algebra itself only prunes exact zeros).
  PhasePoly pruned(double tol) const;

 private:
  int gens_;
  std::map<Monomial, cdouble> terms_;
};

PhasePoly operator+(PhasePoly a, const PhasePoly& b);
PhasePoly operator-(PhasePoly a, const PhasePoly& b);
PhasePoly operator*(cdouble s, PhasePoly a);
PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);  // pointwise

// Largest coefficient difference over the union of the two term sets.
double max_coeff_diff(const PhasePoly& a, const PhasePoly& b);
bool approx_equal(const PhasePoly& a, const PhasePoly& b, double tol = 1e-12);

}  // namespace nc
