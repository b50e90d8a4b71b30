#include "nc/oscillator_algebra.hpp"

#include <cmath>

namespace nc {

QOscillator q_mode(double q, int cutoff) {
  if (cutoff < 2) throw dimension_error("q_mode needs cutoff >= 2");
  if (q < -1.0) throw domain_error("q below -1 is not represented");

  std::vector<double> levels{0.0};
  while (static_cast<int>(levels.size()) < cutoff) {
    const double next = 1.0 - q * levels.back();
    if (next <= 0.0) break;
    levels.push_back(next);
  }
  if (static_cast<int>(levels.size()) < cutoff)
    throw truncation_error("q-ladder closes before the requested cutoff",
                           static_cast<int>(levels.size()));

  QOscillator osc;
  osc.q = q;
  osc.cutoff = cutoff;
  osc.levels = std::move(levels);
  osc.a = ComplexMatrix(cutoff, cutoff);
  for (int n = 0; n + 1 < cutoff; ++n)
    osc.a(n, n + 1) = std::sqrt(osc.levels[n + 1]);
  osc.a_dag = adjoint(osc.a);
  return osc;
}

SusySystem susy_system(int bose_cutoff, SusyHamiltonian form) {
  if (bose_cutoff < 2) throw dimension_error("susy_system needs bose cutoff >= 2");
  FockBasis basis({Mode{Statistics::bose, bose_cutoff}, Mode{Statistics::fermi, 2}});
  const ModeOperators b = mode_operators(basis, 0);
  const ModeOperators f = mode_operators(basis, 1);

  ComplexMatrix q = matmul(b.a.mat, f.a_dag.mat);
  ComplexMatrix qd = adjoint(q);
  ComplexMatrix h = form == SusyHamiltonian::anticommutator
                        ? matmul(q, qd) + matmul(qd, q)
                        : matmul(qd, q);
  return SusySystem{basis, {basis, std::move(q)}, {basis, std::move(h)}, form};
}

std::vector<double> fermion_parity(const FockBasis& basis) {
  int fermi_mode = -1;
  for (int m = 0; m < basis.num_modes(); ++m)
    if (basis.mode(m).stat == Statistics::fermi) {
      if (fermi_mode >= 0) throw dimension_error("grading needs a single fermi mode");
      fermi_mode = m;
    }
  if (fermi_mode < 0) throw dimension_error("grading needs a fermi mode");
  std::vector<double> g(basis.dim());
  for (int idx = 0; idx < basis.dim(); ++idx)
    g[idx] = basis.occupation_of(idx)[fermi_mode] % 2 == 0 ? 1.0 : -1.0;
  return g;
}

cdouble witten_index(const OperatorMatrix& supercharge,
                     const OperatorMatrix& hamiltonian, double beta,
                     int margin) {
  if (beta <= 0.0) throw domain_error("witten_index needs beta > 0");
  if (!(supercharge.basis == hamiltonian.basis))
    throw dimension_error("supercharge and hamiltonian on different bases");
  if (!hamiltonian.hermitian_within(1e-10))
    throw domain_error("witten_index needs a hermitian hamiltonian");

  const std::vector<double> parity = fermion_parity(hamiltonian.basis);
  const std::vector<int> keep = interior_indices_total(hamiltonian.basis, margin);

  ComplexMatrix h_int = restrict_to(hamiltonian.mat, keep);
  h_int *= -beta;
  const ComplexMatrix boltz = expm(h_int);
  cdouble index = 0.0;
  for (std::size_t i = 0; i < keep.size(); ++i)
    index += parity[keep[i]] * boltz(i, i);
  return index;
}

double graded_kernel_dimension(const OperatorMatrix& hamiltonian, int margin,
                               double tol) {
  if (!hamiltonian.hermitian_within(1e-10))
    throw domain_error("graded kernel needs a hermitian hamiltonian");
  const std::vector<double> parity = fermion_parity(hamiltonian.basis);
  const std::vector<int> keep = interior_indices_total(hamiltonian.basis, margin);
  const ComplexMatrix h_int = restrict_to(hamiltonian.mat, keep);

  // Embedded real eigensystem; each complex eigenpair appears twice, so the
  // graded sum over embedded kernel vectors is halved.
  const SymmetricEigen es = hermitian_embedded_eigs(h_int);
  const std::size_t k = keep.size();
  double graded = 0.0;
  for (std::size_t j = 0; j < es.values.size(); ++j) {
    if (std::abs(es.values[j]) > tol) continue;
    for (std::size_t i = 0; i < k; ++i) {
      const double u = es.vectors[i * es.n + j];
      const double v = es.vectors[(i + k) * es.n + j];
      graded += 0.5 * parity[keep[i]] * (u * u + v * v);
    }
  }
  return graded;
}

int skew_charge_kernel_dimension(const OperatorMatrix& supercharge, int margin,
                                 double tol) {
  const std::vector<int> keep =
      interior_indices_total(supercharge.basis, margin);
  ComplexMatrix s = restrict_to(supercharge.mat, keep);
  ComplexMatrix skew = s - adjoint(s);
  skew *= cdouble(0.0, 1.0);  // i(Q - Q^+) is hermitian
  int dim = 0;
  for (double v : hermitian_eigenvalues(skew))
    if (std::abs(v) <= tol) ++dim;
  return dim;
}

}  // namespace nc
