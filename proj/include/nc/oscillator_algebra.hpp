#pragma once

// q-deformed oscillator a a^+ + q a^+ a = 1, interpolating between the
// bosonic (q = -1) and fermionic (q = +1) ladders, plus the two-sector SUSY
// system Q = a (x) f^+ and its graded (Witten) trace.

#include <complex>
#include <vector>

#include "nc/fock_basis.hpp"

namespace nc {

struct QOscillator {
  double q = 0.0;
  int cutoff = 0;
  std::vector<double> levels;  // eigenvalues of a^+ a, levels[0] = 0
  ComplexMatrix a, a_dag;      // cutoff x cutoff
};

// Levels follow lambda_{n+1} = 1 - q lambda_n from lambda_0 = 0; the ladder
// closes where a level would drop to <= 0, and asking for more than the
// closed ladder throws truncation_error carrying the admissible cutoff.
QOscillator q_mode(double q, int cutoff);

enum class SusyHamiltonian {
  anticommutator,  // H = Q Q^+ + Q^+ Q; [Q, H] = 0 holds identically
  qdagq            // H = Q^+ Q as printed; commutant residual is reported
};

struct SusySystem {
  FockBasis basis;  // bose(cutoff) (x) fermi
  OperatorMatrix supercharge;
  OperatorMatrix hamiltonian;
  SusyHamiltonian form;
};

SusySystem susy_system(int bose_cutoff,
                       SusyHamiltonian form = SusyHamiltonian::anticommutator);

// Graded trace Tr((-1)^F exp(-beta H)) restricted to the total-occupation
// interior, which is invariant under Q and Q^+ so the boson/fermion pairing
// cancels exactly. The grading comes from the fermi tensor factor.
cdouble witten_index(const OperatorMatrix& supercharge,
                     const OperatorMatrix& hamiltonian, double beta,
                     int margin = 2);

// Tr((-1)^F P_ker(H)) on the same interior: +1 per bosonic zero mode, -1 per
// fermionic one.
double graded_kernel_dimension(const OperatorMatrix& hamiltonian, int margin = 2,
                               double tol = 1e-8);

// dim Ker(Q - Q^+) on the interior block.
int skew_charge_kernel_dimension(const OperatorMatrix& supercharge,
                                 int margin = 2, double tol = 1e-8);

// (-1)^F diagonal for a basis containing exactly one fermi mode.
std::vector<double> fermion_parity(const FockBasis& basis);

}  // namespace nc
