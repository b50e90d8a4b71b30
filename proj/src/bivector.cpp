#include "nc/bivector.hpp"

#include <cmath>

#include "nc/complex_matrix.hpp"

namespace nc {

Bivector::Bivector(int n) : n_(n) {
  if (n <= 0) throw dimension_error("bivector needs a positive generator count");
  e_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

std::size_t Bivector::idx(int a, int b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw dimension_error("bivector index out of range");
  return static_cast<std::size_t>(a) * n_ + b;
}

void Bivector::set(int a, int b, double v) {
  if (a == b) {
    if (v != 0.0) throw domain_error("bivector diagonal must vanish");
    return;
  }
  e_[idx(a, b)] = v;
  e_[idx(b, a)] = -v;
}

Bivector Bivector::from_upper(int n, const std::vector<double>& upper) {
  Bivector pi(n);
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper.size() != expected)
    throw dimension_error("bivector upper triangle has wrong length");
  std::size_t k = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pi.set(a, b, upper[k++]);
  return pi;
}

Bivector Bivector::canonical(int nmodes) {
  Bivector pi(2 * nmodes);
  for (int i = 0; i < nmodes; ++i) pi.set(i, nmodes + i, 1.0);
  return pi;
}

Bivector Bivector::phase_space(const Bivector& theta_x, const Bivector& theta_p,
                               bool canonical_pairing) {
  if (theta_x.size() != theta_p.size())
    throw dimension_error("coordinate and momentum blocks differ in size");
  const int n = theta_x.size();
  Bivector pi(2 * n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      pi.set(a, b, theta_x(a, b));
      pi.set(n + a, n + b, theta_p(a, b));
    }
  if (canonical_pairing)
    for (int i = 0; i < n; ++i) pi.set(i, n + i, 1.0);
  return pi;
}

bool Bivector::is_zero() const {
  for (double v : e_)
    if (v != 0.0) return false;
  return true;
}

Bivector Bivector::scaled(double s) const {
  Bivector r(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) r.set(a, b, s * (*this)(a, b));
  return r;
}

Bivector Bivector::inverse() const {
  ComplexMatrix m(n_, n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) m(a, b) = (*this)(a, b);
  LUDecomposition lu(m);
  if (lu.singular()) throw singular_error("bivector is not invertible");
  const ComplexMatrix inv = lu.inverse();
  double residual = max_abs_diff(matmul(m, inv), ComplexMatrix::identity(n_));
  if (residual > 1e-12)
    throw singular_error("bivector inverse residual exceeds 1e-12");
  Bivector r(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      // the numeric inverse of an antisymmetric matrix is antisymmetric up to
      // rounding; symmetrise so the invariant holds exactly
      const double v = 0.5 * (inv(a, b).real() - inv(b, a).real());
      r.set(a, b, v);
    }
  return r;
}

}  // namespace nc
