#pragma once

// Planar charged particle in a magnetic field B as the worked noncommutative
// example: theta = 1/B, ladder a = sqrt(B/2)(x^1 + i x^2), equally spaced
// spectrum with gap B, and the exponential braiding relation between
// exp(i x^1) and exp(i x^2).

#include "nc/fock_basis.hpp"
#include "nc/phase_poly.hpp"

namespace nc {

struct LandauSystem {
  double b_field = 0.0;  // theta = 1/B
  int cutoff = 0;
  FockBasis basis;
  ComplexMatrix a, a_dag;
  ComplexMatrix x1, x2;  // [x1, x2] = (i/B) I on the interior block
  ComplexMatrix h;       // B (a^+ a + 1/2)
};

LandauSystem landau_system(double b_field, int cutoff);

// Interior spectrum of H, ascending.
std::vector<double> landau_spectrum(const LandauSystem& sys, int margin = 2);

// Mean interior diagonal of G = e^{i x1} e^{i x2} e^{-i x1} e^{-i x2} on a
// one-mode representation with [x1, x2] = i theta. Throws truncation_error
// when G deviates from scalar * identity by more than 0.05 on the interior.
// margin < 0 selects the default cutoff/2.
cdouble braiding_phase(double theta, int cutoff, int margin = -1);

// Star commutator [x'^1, x'^2] after the printed shift
// x^i -> x^i + i theta eps^{ij} A_j with A_i = (B/2) eps_ij x^j; the result
// is the constant (1 - i theta B / 2)^2 * i theta, reported verbatim
// (the shifted coordinate is not hermitian).
PhasePoly shifted_commutator(double theta, double b_field);

}  // namespace nc
