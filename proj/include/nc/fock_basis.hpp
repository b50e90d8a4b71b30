#pragma once

// Truncated multi-mode Fock space. Mode 0 is the slowest (leftmost Kronecker
// factor); fermionic modes always have dimension 2. Operators on different
// modes are embedded as plain tensor factors and therefore commute.

#include <vector>

#include "nc/complex_matrix.hpp"
#include "nc/errors.hpp"

namespace nc {

enum class Statistics { bose, fermi };

struct Mode {
  Statistics stat;
  int cutoff;  // dimension of the mode factor; fermi is always 2
  bool operator==(const Mode&) const = default;
};

class FockBasis {
 public:
  explicit FockBasis(std::vector<Mode> modes);
  static FockBasis bose(int nmodes, int cutoff);

  int dim() const { return dim_; }
  int num_modes() const { return static_cast<int>(modes_.size()); }
  const Mode& mode(int m) const { return modes_.at(m); }
  const std::vector<Mode>& modes() const { return modes_; }

  int index_of(const std::vector<int>& occ) const;
  std::vector<int> occupation_of(int index) const;

  bool operator==(const FockBasis&) const = default;

 private:
  std::vector<Mode> modes_;
  std::vector<int> strides_;
  int dim_;
};

struct OperatorMatrix {
  FockBasis basis;
  ComplexMatrix mat;
  bool hermitian_within(double tol = 1e-10) const { return is_hermitian(mat, tol); }
};

struct ModeOperators {
  OperatorMatrix a, a_dag, x, p;
};

// Ladder pair and the quadratures x = (a + a^+)/sqrt2, p = i(a^+ - a)/sqrt2
// for one mode, embedded into the full space.
ModeOperators mode_operators(const FockBasis& basis, int mode);

// Basis states whose every bose occupation is <= cutoff - margin. Fermionic
// modes are exact and unaffected. Throws when nothing survives.
std::vector<int> interior_indices(const FockBasis& basis, int margin);

// Basis states with total occupation <= (max total occupation) - margin.
// This truncation commutes with any operator that conserves or lowers the
// total excitation number, e.g. a supercharge a (x) f^+.
std::vector<int> interior_indices_total(const FockBasis& basis, int margin);

// P A P on the same basis (idempotent for fixed margin).
OperatorMatrix interior_block(const OperatorMatrix& op, int margin);

// max |(A - B)_ij| over interior rows and columns.
double interior_max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b,
                             const std::vector<int>& keep);

}  // namespace nc
