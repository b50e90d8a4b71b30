#include "nc/gaussian_partition.hpp"

#include <cmath>
#include <functional>

namespace nc {

QuadraticAction::QuadraticAction(ComplexMatrix h_in, Statistics stat_in)
    : m(static_cast<int>(h_in.rows())), h(std::move(h_in)), stat(stat_in) {
  if (!h.square() || m == 0) throw dimension_error("quadratic form must be square");
  if (!is_hermitian(h, 1e-12))
    throw domain_error("quadratic form must be hermitian to 1e-12");
  const std::vector<double> eigs = hermitian_eigenvalues(h);
  if (stat == Statistics::bose) {
    for (double v : eigs)
      if (v <= 0.0)
        throw domain_error("bosonic quadratic form must be positive definite");
  } else {
    for (double v : eigs)
      if (std::abs(v) < 1e-14)
        throw domain_error("quadratic form must be invertible");
  }
}

cdouble log_partition(const QuadraticAction& qa, const std::vector<cdouble>& source) {
  if (!source.empty() && static_cast<int>(source.size()) != qa.m)
    throw dimension_error("source length does not match mode count");

  const LUDecomposition lu(qa.h);
  const cdouble logdet = std::log(lu.det());

  cdouble quad = 0.0;
  if (!source.empty()) {
    ComplexMatrix j(qa.m, 1);
    for (int i = 0; i < qa.m; ++i) j(i, 0) = source[i];
    const ComplexMatrix hinvj = lu.solve(j);
    for (int i = 0; i < qa.m; ++i) quad += std::conj(source[i]) * hinvj(i, 0);
  }
  return qa.stat == Statistics::bose ? -logdet + quad : logdet - quad;
}

cdouble green(const QuadraticAction& qa, const std::vector<GreenInsertion>& ins) {
  for (const auto& g : ins)
    if (g.mode < 0 || g.mode >= qa.m)
      throw dimension_error("green insertion mode out of range");
  if (ins.size() % 2 != 0) return 0.0;  // odd correlator
  const ComplexMatrix hinv = inverse(qa.h);
  const bool fermi = qa.stat == Statistics::fermi;

  // Recursive Wick sum: contract the first unmatched insertion with every
  // later unmatched one of opposite conjugation. For fermions each
  // contraction picks up (-1)^(unmatched insertions it jumps over), and a
  // reversed pair <chi^+ chi> flips sign once more.
  std::vector<bool> matched(ins.size(), false);
  std::size_t remaining = ins.size();

  std::function<cdouble()> sum_pairings = [&]() -> cdouble {
    if (remaining == 0) return cdouble(1.0);
    std::size_t first = 0;
    while (matched[first]) ++first;
    matched[first] = true;
    cdouble total = 0.0;
    int jumped = 0;
    for (std::size_t v = first + 1; v < ins.size(); ++v) {
      if (matched[v]) continue;
      if (ins[v].conjugated == ins[first].conjugated) {
        ++jumped;
        continue;
      }
      cdouble contraction;
      if (!ins[first].conjugated)  // <chi_i chi^+_j>
        contraction = hinv(ins[first].mode, ins[v].mode);
      else  // <chi^+_j chi_i>
        contraction = (fermi ? -1.0 : 1.0) * hinv(ins[v].mode, ins[first].mode);
      if (fermi && jumped % 2 == 1) contraction = -contraction;
      matched[v] = true;
      remaining -= 2;
      total += contraction * sum_pairings();
      remaining += 2;
      matched[v] = false;
      ++jumped;
    }
    matched[first] = false;
    return total;
  };

  return sum_pairings();
}

}  // namespace nc
