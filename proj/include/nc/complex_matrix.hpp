#pragma once

// Dense complex linear algebra on row-major buffers.
//
// The multiply kernel comes in two flavours: a serial reference and an
// OpenMP version parallelised over output rows. Both accumulate each output
// element in the same k-order, so their results are bitwise identical; the
// serial kernel is kept as the oracle the parallel one is tested against.

#include <complex>
#include <cstddef>
#include <vector>

#include "nc/errors.hpp"

namespace nc {

using cdouble = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cdouble& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cdouble& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  cdouble* data() { return a_.data(); }
  const cdouble* data() const { return a_.data(); }
  const std::vector<cdouble>& storage() const { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cdouble s);

 private:
  std::size_t rows_, cols_;
  std::vector<cdouble> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Serial reference kernel.
ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);
// OpenMP kernel, bitwise identical to matmul_serial.
ComplexMatrix matmul_parallel(const ComplexMatrix& a, const ComplexMatrix& b);
// Dispatch: parallel for large products, serial otherwise (same result).
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

cdouble trace(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& a, double tol);
double one_norm(const ComplexMatrix& a);

// LU with partial pivoting. Throws singular_error on (numerically) singular
// input from solve/inverse; determinant of a singular matrix is just 0.
class LUDecomposition {
 public:
  explicit LUDecomposition(ComplexMatrix a);
  cdouble det() const;
  ComplexMatrix solve(const ComplexMatrix& rhs) const;
  ComplexMatrix inverse() const;
  bool singular() const { return singular_; }

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> piv_;
  int pivot_sign_;
  bool singular_;
};

cdouble determinant(const ComplexMatrix& a);
ComplexMatrix inverse(const ComplexMatrix& a);

// Matrix exponential, scaling-and-squaring with a degree-13 Pade
// approximant; accurate to ~1e-13 relative for well-scaled inputs.
ComplexMatrix expm(const ComplexMatrix& a);

// Cyclic Jacobi eigensolver for real symmetric matrices (row-major buffer).
// Eigenvalues ascending; eigenvector j is the j-th column of `vectors`.
struct SymmetricEigen {
  std::size_t n = 0;
  std::vector<double> values;
  std::vector<double> vectors;
};
SymmetricEigen symmetric_eigs(const std::vector<double>& a, std::size_t n);

// Eigenvalues of a complex hermitian matrix, ascending, via the real
// 2n x 2n embedding [[X, -Y], [Y, X]] of A = X + iY.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// Full embedded eigensystem of a hermitian matrix: 2n eigenpairs, each
// complex eigenpair appearing twice. Used for graded kernel counting.
SymmetricEigen hermitian_embedded_eigs(const ComplexMatrix& a);

// Submatrix keeping the given row/column indices (in order).
ComplexMatrix restrict_to(const ComplexMatrix& a, const std::vector<int>& keep);
// P A P with P the 0/1 projector onto the kept indices (same shape as A).
ComplexMatrix project_onto(const ComplexMatrix& a, const std::vector<int>& keep);

}  // namespace nc
