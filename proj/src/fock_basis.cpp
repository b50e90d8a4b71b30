#include "nc/fock_basis.hpp"

#include <cmath>

namespace nc {

FockBasis::FockBasis(std::vector<Mode> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw dimension_error("basis needs at least one mode");
  for (auto& m : modes_) {
    if (m.stat == Statistics::fermi && m.cutoff != 2)
      throw dimension_error("fermi modes have dimension exactly 2");
    if (m.cutoff < 1) throw dimension_error("mode cutoff must be positive");
  }
  strides_.assign(modes_.size(), 1);
  for (int m = static_cast<int>(modes_.size()) - 2; m >= 0; --m)
    strides_[m] = strides_[m + 1] * modes_[m + 1].cutoff;
  dim_ = strides_[0] * modes_[0].cutoff;
}

FockBasis FockBasis::bose(int nmodes, int cutoff) {
  std::vector<Mode> ms(nmodes, Mode{Statistics::bose, cutoff});
  return FockBasis(std::move(ms));
}

int FockBasis::index_of(const std::vector<int>& occ) const {
  if (occ.size() != modes_.size()) throw dimension_error("occupation tuple length");
  int idx = 0;
  for (std::size_t m = 0; m < occ.size(); ++m) {
    if (occ[m] < 0 || occ[m] >= modes_[m].cutoff)
      throw dimension_error("occupation out of range");
    idx += occ[m] * strides_[m];
  }
  return idx;
}

std::vector<int> FockBasis::occupation_of(int index) const {
  if (index < 0 || index >= dim_) throw dimension_error("basis index out of range");
  std::vector<int> occ(modes_.size());
  for (std::size_t m = 0; m < modes_.size(); ++m) {
    occ[m] = index / strides_[m];
    index -= occ[m] * strides_[m];
  }
  return occ;
}

ModeOperators mode_operators(const FockBasis& basis, int mode) {
  if (mode < 0 || mode >= basis.num_modes())
    throw dimension_error("mode index out of range");
  const int dim = basis.dim();
  ComplexMatrix a(dim, dim);
  for (int idx = 0; idx < dim; ++idx) {
    std::vector<int> occ = basis.occupation_of(idx);
    const int n = occ[mode];
    if (n == 0) continue;
    occ[mode] = n - 1;
    const int lo = basis.index_of(occ);
    a(lo, idx) = std::sqrt(static_cast<double>(n));
  }
  ComplexMatrix ad = adjoint(a);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix x = a + ad;
  x *= inv_sqrt2;
  ComplexMatrix p = ad - a;
  p *= cdouble(0.0, inv_sqrt2);
  return ModeOperators{{basis, std::move(a)},
                       {basis, std::move(ad)},
                       {basis, std::move(x)},
                       {basis, std::move(p)}};
}

std::vector<int> interior_indices(const FockBasis& basis, int margin) {
  if (margin < 0) throw dimension_error("negative interior margin");
  std::vector<int> keep;
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const std::vector<int> occ = basis.occupation_of(idx);
    bool ok = true;
    for (int m = 0; m < basis.num_modes(); ++m) {
      if (basis.mode(m).stat != Statistics::bose) continue;
      if (occ[m] > basis.mode(m).cutoff - margin) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(idx);
  }
  if (keep.empty())
    throw dimension_error("interior block is empty: margin too large");
  return keep;
}

std::vector<int> interior_indices_total(const FockBasis& basis, int margin) {
  if (margin < 0) throw dimension_error("negative interior margin");
  int max_total = 0;
  for (int m = 0; m < basis.num_modes(); ++m)
    max_total += basis.mode(m).cutoff - 1;
  const int bound = max_total - margin;
  std::vector<int> keep;
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const std::vector<int> occ = basis.occupation_of(idx);
    int total = 0;
    for (int v : occ) total += v;
    if (total <= bound) keep.push_back(idx);
  }
  if (keep.empty())
    throw dimension_error("interior block is empty: margin too large");
  return keep;
}

OperatorMatrix interior_block(const OperatorMatrix& op, int margin) {
  const std::vector<int> keep = interior_indices(op.basis, margin);
  return OperatorMatrix{op.basis, project_onto(op.mat, keep)};
}

double interior_max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b,
                             const std::vector<int>& keep) {
  double m = 0.0;
  for (int i : keep)
    for (int j : keep) {
      const auto d = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) -
                     b(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      m = std::max(m, std::abs(d));
    }
  return m;
}

}  // namespace nc
