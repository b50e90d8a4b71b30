#include "nc/complex_matrix.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace nc {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("matrix shape mismatch");
}

void require_square(const ComplexMatrix& a) {
  if (!a.square()) throw dimension_error("square matrix required");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cdouble s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

namespace {

// Shared inner kernel: row block [r0, r1) of the product. The k-loop is the
// innermost accumulation for every element in both the serial and the OpenMP
// path, which is what makes the two bitwise identical.
void matmul_rows(const ComplexMatrix& a, const ComplexMatrix& b,
                 ComplexMatrix& c, std::size_t r0, std::size_t r1) {
  const std::size_t n = a.cols();
  const std::size_t m = b.cols();
  for (std::size_t i = r0; i < r1; ++i) {
    cdouble* crow = &c(i, 0);
    for (std::size_t k = 0; k < n; ++k) {
      const cdouble aik = a(i, k);
      if (aik == cdouble(0.0, 0.0)) continue;
      const cdouble* brow = &b(k, 0);
      for (std::size_t j = 0; j < m; ++j) crow[j] += aik * brow[j];
    }
  }
}

}  // namespace

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matmul shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  matmul_rows(a, b, c, 0, a.rows());
  return c;
}

ComplexMatrix matmul_parallel(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matmul shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    matmul_rows(a, b, c, static_cast<std::size_t>(i),
                static_cast<std::size_t>(i) + 1);
  return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Work estimate; below ~64^3 the fork/join overhead dominates.
  const double work = static_cast<double>(a.rows()) * a.cols() * b.cols();
  if (work >= 64.0 * 64.0 * 64.0) return matmul_parallel(a, b);
  return matmul_serial(a, b);
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = std::conj(a(i, j));
  return r;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cdouble aij = a(i, j);
      if (aij == cdouble(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return r;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b) - matmul(b, a);
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b) + matmul(b, a);
}

cdouble trace(const ComplexMatrix& a) {
  require_square(a);
  cdouble t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& v : a.storage()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t k = 0; k < a.storage().size(); ++k)
    m = std::max(m, std::abs(a.storage()[k] - b.storage()[k]));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.square()) return false;
  return max_abs_diff(a, adjoint(a)) <= tol;
}

double one_norm(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    m = std::max(m, s);
  }
  return m;
}

LUDecomposition::LUDecomposition(ComplexMatrix a)
    : lu_(std::move(a)), pivot_sign_(1), singular_(false) {
  require_square(lu_);
  const std::size_t n = lu_.rows();
  piv_.resize(n);
  std::iota(piv_.begin(), piv_.end(), std::size_t{0});
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    double best = std::abs(lu_(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, col));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0.0) {
      singular_ = true;
      continue;
    }
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(col, j));
      std::swap(piv_[p], piv_[col]);
      pivot_sign_ = -pivot_sign_;
    }
    const cdouble d = lu_(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      const cdouble f = lu_(i, col) / d;
      lu_(i, col) = f;
      if (f == cdouble(0.0, 0.0)) continue;
      for (std::size_t j = col + 1; j < n; ++j) lu_(i, j) -= f * lu_(col, j);
    }
  }
}

cdouble LUDecomposition::det() const {
  if (singular_) return 0.0;
  cdouble d = static_cast<double>(pivot_sign_);
  for (std::size_t i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
  return d;
}

ComplexMatrix LUDecomposition::solve(const ComplexMatrix& rhs) const {
  if (singular_) throw singular_error("LU solve on singular matrix");
  const std::size_t n = lu_.rows();
  if (rhs.rows() != n) throw dimension_error("LU solve rhs shape mismatch");
  ComplexMatrix x(n, rhs.cols());
  // piv_[i] records the original row now living at position i.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(i, j) = rhs(piv_[i], j);
  // forward substitution (unit lower)
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k) {
      const cdouble f = lu_(i, k);
      if (f == cdouble(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) x(i, j) -= f * x(k, j);
    }
  // back substitution
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) {
      const cdouble f = lu_(ii, k);
      if (f == cdouble(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) x(ii, j) -= f * x(k, j);
    }
    const cdouble d = lu_(ii, ii);
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(ii, j) /= d;
  }
  return x;
}

ComplexMatrix LUDecomposition::inverse() const {
  return solve(ComplexMatrix::identity(lu_.rows()));
}

cdouble determinant(const ComplexMatrix& a) { return LUDecomposition(a).det(); }

ComplexMatrix inverse(const ComplexMatrix& a) {
  return LUDecomposition(a).inverse();
}

ComplexMatrix expm(const ComplexMatrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const double theta13 = 5.371920351148152;

  int s = 0;
  const double nrm = one_norm(a);
  if (nrm > theta13) {
    s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    if (s < 0) s = 0;
  }
  ComplexMatrix x = a;
  x *= std::ldexp(1.0, -s);

  const ComplexMatrix ident = ComplexMatrix::identity(n);
  const ComplexMatrix x2 = matmul(x, x);
  const ComplexMatrix x4 = matmul(x2, x2);
  const ComplexMatrix x6 = matmul(x4, x2);

  ComplexMatrix w = b[13] * x6 + b[11] * x4 + b[9] * x2;
  w = matmul(x6, w);
  w += b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * ident;
  const ComplexMatrix u = matmul(x, w);

  ComplexMatrix z = b[12] * x6 + b[10] * x4 + b[8] * x2;
  z = matmul(x6, z);
  z += b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * ident;

  ComplexMatrix r = LUDecomposition(z - u).solve(z + u);
  for (int i = 0; i < s; ++i) r = matmul(r, r);
  return r;
}

SymmetricEigen symmetric_eigs(const std::vector<double>& a_in, std::size_t n) {
  if (a_in.size() != n * n) throw dimension_error("symmetric_eigs buffer size");
  std::vector<double> a = a_in;
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto vt = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(at(i, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      scale = std::max(scale, std::abs(at(i, j)));
  if (scale == 0.0) scale = 1.0;

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (std::sqrt(off) <= 1e-15 * scale * static_cast<double>(n)) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = vt(k, p);
          const double vkq = vt(k, q);
          vt(k, p) = c * vkp - s * vkq;
          vt(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  SymmetricEigen out;
  out.n = n;
  out.values.resize(n);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
  out.vectors.assign(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = diag[order[j]];
    for (std::size_t i = 0; i < n; ++i)
      out.vectors[i * n + j] = vt(i, order[j]);
  }
  return out;
}

namespace {

std::vector<double> embed_hermitian(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> e(4 * n * n, 0.0);
  const std::size_t m = 2 * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double x = a(i, j).real();
      const double y = a(i, j).imag();
      e[i * m + j] = x;
      e[(i + n) * m + (j + n)] = x;
      e[i * m + (j + n)] = -y;
      e[(i + n) * m + j] = y;
    }
  return e;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  require_square(a);
  const SymmetricEigen full = symmetric_eigs(embed_hermitian(a), 2 * a.rows());
  // Each complex eigenvalue shows up twice in the embedding; take every
  // other entry of the sorted doubled spectrum.
  std::vector<double> vals(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) vals[i] = 0.5 * (full.values[2 * i] + full.values[2 * i + 1]);
  return vals;
}

SymmetricEigen hermitian_embedded_eigs(const ComplexMatrix& a) {
  require_square(a);
  return symmetric_eigs(embed_hermitian(a), 2 * a.rows());
}

ComplexMatrix restrict_to(const ComplexMatrix& a, const std::vector<int>& keep) {
  ComplexMatrix r(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      r(i, j) = a(static_cast<std::size_t>(keep[i]),
                  static_cast<std::size_t>(keep[j]));
  return r;
}

ComplexMatrix project_onto(const ComplexMatrix& a, const std::vector<int>& keep) {
  ComplexMatrix r(a.rows(), a.cols());
  for (int i : keep)
    for (int j : keep)
      r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return r;
}

}  // namespace nc
