#include "nc/weyl.hpp"

#include <algorithm>
#include <cmath>

namespace nc {

namespace {

// Mode-local ladder and quadratures (dim = cutoff of that single mode).
struct LocalOps {
  ComplexMatrix x, p;
};

LocalOps local_quadratures(int dim) {
  ComplexMatrix a(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ComplexMatrix ad = adjoint(a);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix x = a + ad;
  x *= inv_sqrt2;
  ComplexMatrix p = ad - a;
  p *= cdouble(0.0, inv_sqrt2);
  return {std::move(x), std::move(p)};
}

// Average of the products over all distinct orderings of a x-factors and
// b p-factors of one mode.
ComplexMatrix symmetrized_power(const LocalOps& ops, int a, int b, int dim) {
  std::vector<int> word;
  word.insert(word.end(), a, 0);
  word.insert(word.end(), b, 1);
  ComplexMatrix sum(dim, dim);
  long count = 0;
  std::sort(word.begin(), word.end());
  do {
    ComplexMatrix prod = ComplexMatrix::identity(dim);
    for (int w : word) prod = matmul(prod, w == 0 ? ops.x : ops.p);
    sum += prod;
    ++count;
  } while (std::next_permutation(word.begin(), word.end()));
  sum *= 1.0 / static_cast<double>(count);
  return sum;
}

}  // namespace

OperatorMatrix weyl_quantize(const PhasePoly& f, const FockBasis& basis) {
  const int nmodes = basis.num_modes();
  if (f.generators() != 2 * nmodes)
    throw dimension_error("symbol generators do not match basis mode count");

  std::vector<LocalOps> local;
  local.reserve(nmodes);
  for (int m = 0; m < nmodes; ++m)
    local.push_back(local_quadratures(basis.mode(m).cutoff));

  ComplexMatrix out(basis.dim(), basis.dim());
  for (const auto& [mono, coeff] : f.terms()) {
    ComplexMatrix term(1, 1);
    term(0, 0) = 1.0;
    for (int m = 0; m < nmodes; ++m) {
      const int dim = basis.mode(m).cutoff;
      const int xpow = mono[m];
      const int ppow = mono[nmodes + m];
      if (xpow == 0 && ppow == 0) {
        term = kron(term, ComplexMatrix::identity(dim));
      } else {
        term = kron(term, symmetrized_power(local[m], xpow, ppow, dim));
      }
    }
    term *= coeff;
    out += term;
  }
  return OperatorMatrix{basis, std::move(out)};
}

}  // namespace nc
