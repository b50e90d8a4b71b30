#pragma once

// Finite-dimensional Gaussian partition functions for quadratic actions
// chi^+ h chi with sources, Euclidean convention exp(-chi^+ h chi), and the
// Wick expansion of n-point Green functions. Normalised so that
// Z(h = I, J = 0) = 1; only ratios carry meaning.

#include <vector>

#include "nc/complex_matrix.hpp"
#include "nc/fock_basis.hpp"

namespace nc {

struct QuadraticAction {
  int m = 0;
  ComplexMatrix h;
  Statistics stat = Statistics::bose;

  // Checks hermiticity to 1e-12; bosonic actions must be positive definite.
  QuadraticAction(ComplexMatrix h_in, Statistics stat_in);
};

// bose: log Z = -log det h + J^+ h^{-1} J
// fermi: log Z = +log det h - J^+ h^{-1} J
// An empty source stands for J = 0.
cdouble log_partition(const QuadraticAction& qa, const std::vector<cdouble>& source);

struct GreenInsertion {
  bool conjugated = false;
  int mode = 0;
};

// Wick sum over complete contractions pairing each chi with a chi^+;
// the two-point function is <chi_i chi^+_j> = (h^{-1})_ij for both
// statistics, fermionic pairings carry the permutation sign. Odd or
// unbalanced insertion lists have no complete pairing and give exactly 0.
cdouble green(const QuadraticAction& qa, const std::vector<GreenInsertion>& ins);

}  // namespace nc
