#include "nc/bogoliubov.hpp"

#include <cmath>

#include "nc/star_product.hpp"

namespace nc {

namespace {

void require_blocks(const BogoliubovTransform& t) {
  const std::size_t m = static_cast<std::size_t>(t.m);
  for (const ComplexMatrix* b : {&t.alpha, &t.beta, &t.gamma, &t.delta})
    if (b->rows() != m || b->cols() != m)
      throw dimension_error("transform blocks must all be m x m");
}

}  // namespace

BogoliubovTransform BogoliubovTransform::identity(int m) {
  BogoliubovTransform t;
  t.m = m;
  t.alpha = ComplexMatrix::identity(m);
  t.beta = ComplexMatrix(m, m);
  t.gamma = ComplexMatrix(m, m);
  t.delta = ComplexMatrix::identity(m);
  return t;
}

BogoliubovTransform BogoliubovTransform::squeeze(double r) {
  BogoliubovTransform t;
  t.m = 1;
  t.alpha = ComplexMatrix(1, 1);
  t.beta = ComplexMatrix(1, 1);
  t.gamma = ComplexMatrix(1, 1);
  t.delta = ComplexMatrix(1, 1);
  t.alpha(0, 0) = std::cosh(r);
  t.delta(0, 0) = std::cosh(r);
  t.beta(0, 0) = std::sinh(r);
  t.gamma(0, 0) = std::sinh(r);
  return t;
}

bool BogoliubovTransform::adjoint_consistent(double tol) const {
  require_blocks(*this);
  return max_abs_diff(gamma, conjugate(beta)) <= tol &&
         max_abs_diff(delta, conjugate(alpha)) <= tol;
}

BogoliubovTransform compose(const BogoliubovTransform& t2,
                            const BogoliubovTransform& t1) {
  require_blocks(t1);
  require_blocks(t2);
  if (t1.m != t2.m) throw dimension_error("composing transforms of different size");
  BogoliubovTransform t;
  t.m = t1.m;
  t.alpha = matmul(t2.alpha, t1.alpha) + matmul(t2.beta, t1.gamma);
  t.beta = matmul(t2.alpha, t1.beta) + matmul(t2.beta, t1.delta);
  t.gamma = matmul(t2.gamma, t1.alpha) + matmul(t2.delta, t1.gamma);
  t.delta = matmul(t2.gamma, t1.beta) + matmul(t2.delta, t1.delta);
  return t;
}

double AlgebraResidual::max_oracle() const {
  return std::max(max_abs(pair_bracket), max_abs(same_bracket));
}

double AlgebraResidual::max_printed() const {
  return std::max(max_abs(printed_unit), max_abs(printed_cross));
}

AlgebraResidual algebra_residual(const BogoliubovTransform& t, Statistics stat) {
  require_blocks(t);
  const double sign = stat == Statistics::bose ? -1.0 : 1.0;
  const ComplexMatrix ident = ComplexMatrix::identity(t.m);
  AlgebraResidual r;
  // [b_i, b_j^+] = (alpha delta^T)_ij - (beta gamma^T)_ij for bosons,
  // {b_i, b_j^+} = (alpha delta^T)_ij + (beta gamma^T)_ij for fermions;
  // same-type brackets analogously with beta <-> alpha on the right.
  r.pair_bracket = matmul(t.alpha, transpose(t.delta)) +
                   cdouble(sign) * matmul(t.beta, transpose(t.gamma)) - ident;
  r.same_bracket = matmul(t.alpha, transpose(t.beta)) +
                   cdouble(sign) * matmul(t.beta, transpose(t.alpha));
  r.printed_unit =
      matmul(t.alpha, t.delta) - matmul(t.beta, transpose(t.gamma)) - ident;
  r.printed_cross = matmul(t.alpha, t.gamma) + matmul(t.beta, transpose(t.delta));
  return r;
}

double QAlgebraResidual::max_oracle() const {
  return std::max(std::max(std::abs(unit), std::abs(number)),
                  std::max(std::abs(lowering), std::abs(raising)));
}

double QAlgebraResidual::max_printed() const {
  return std::max(std::max(std::abs(cond_unit), std::abs(cond_number)),
                  std::max(std::abs(cond_lower), std::abs(cond_raise)));
}

QAlgebraResidual q_algebra_residual(const BogoliubovTransform& t, double q) {
  require_blocks(t);
  if (t.m != 1) throw dimension_error("q-algebra residual is defined for scalar blocks");
  const cdouble a = t.alpha(0, 0);
  const cdouble b = t.beta(0, 0);
  const cdouble g = t.gamma(0, 0);
  const cdouble d = t.delta(0, 0);

  QAlgebraResidual r;
  // b b^+ + q b^+ b with a a^+ eliminated through a a^+ = 1 - q a^+ a:
  //   (a d + q g b) 1
  // + ((b g + q d a) - q (a d + q g b)) a^+ a
  // + (1 + q) a g a^2  + (1 + q) b d a^+^2
  r.unit = a * d + q * g * b - 1.0;
  r.number = (b * g + q * d * a) - q * (a * d + q * g * b);
  r.lowering = (1.0 + q) * a * g;
  r.raising = (1.0 + q) * b * d;

  r.cond_unit = a * d + q * g * b - 1.0;
  r.cond_number = b * g + q * d * a - q;
  r.cond_lower = a * g + q * g * a;
  r.cond_raise = b * d + q * d * b;
  return r;
}

TransformedModes apply_transform(
    const BogoliubovTransform& t,
    const std::vector<std::pair<OperatorMatrix, OperatorMatrix>>& mode_pairs,
    Statistics stat, int margin) {
  require_blocks(t);
  if (static_cast<int>(mode_pairs.size()) != t.m)
    throw dimension_error("transform size does not match mode count");
  const FockBasis& basis = mode_pairs.front().first.basis;
  for (const auto& [a, ad] : mode_pairs)
    if (!(a.basis == basis) || !(ad.basis == basis))
      throw dimension_error("mode operators come from different bases");

  const int dim = basis.dim();
  TransformedModes out;
  for (int i = 0; i < t.m; ++i) {
    ComplexMatrix b(dim, dim), bd(dim, dim);
    for (int k = 0; k < t.m; ++k) {
      b += t.alpha(i, k) * mode_pairs[k].first.mat +
           t.beta(i, k) * mode_pairs[k].second.mat;
      bd += t.gamma(i, k) * mode_pairs[k].first.mat +
            t.delta(i, k) * mode_pairs[k].second.mat;
    }
    out.b.push_back({basis, std::move(b)});
    out.b_dag.push_back({basis, std::move(bd)});
  }

  const std::vector<int> keep = interior_indices(basis, margin);
  const double sign = stat == Statistics::bose ? -1.0 : 1.0;
  double res = 0.0, adj = 0.0;
  const ComplexMatrix zero(dim, dim);
  for (int i = 0; i < t.m; ++i) {
    adj = std::max(adj, max_abs_diff(out.b_dag[i].mat, adjoint(out.b[i].mat)));
    for (int j = 0; j < t.m; ++j) {
      ComplexMatrix pair = matmul(out.b[i].mat, out.b_dag[j].mat) +
                           cdouble(sign) * matmul(out.b_dag[j].mat, out.b[i].mat);
      if (i == j) pair -= ComplexMatrix::identity(dim);
      res = std::max(res, interior_max_abs_diff(pair, zero, keep));
      const ComplexMatrix same = matmul(out.b[i].mat, out.b[j].mat) +
                                 cdouble(sign) * matmul(out.b[j].mat, out.b[i].mat);
      res = std::max(res, interior_max_abs_diff(same, zero, keep));
    }
  }
  out.commutator_residual = res;
  out.adjoint_residual = adj;
  return out;
}

ThetaModeTable theta_mode_commutators(const Bivector& theta_x,
                                      const Bivector& theta_p) {
  if (theta_x.size() != theta_p.size())
    throw dimension_error("theta_x and theta_p must share the dimension");
  const int n = theta_x.size();
  const Bivector pi = Bivector::phase_space(theta_x, theta_p, true);
  const int gens = 2 * n;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  std::vector<PhasePoly> mode_a, mode_adag;
  for (int i = 0; i < n; ++i) {
    PhasePoly a(gens), ad(gens);
    a += cdouble(inv_sqrt2) * PhasePoly::generator(gens, i);
    a += cdouble(0.0, inv_sqrt2) * PhasePoly::generator(gens, n + i);
    ad += cdouble(inv_sqrt2) * PhasePoly::generator(gens, i);
    ad += cdouble(0.0, -inv_sqrt2) * PhasePoly::generator(gens, n + i);
    mode_a.push_back(std::move(a));
    mode_adag.push_back(std::move(ad));
  }

  ThetaModeTable table{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const PhasePoly c1 = moyal_bracket(mode_a[i], mode_a[j], pi);
      const PhasePoly c2 = moyal_bracket(mode_a[i], mode_adag[j], pi);
      // brackets of linear symbols against a constant bivector are constants
      if (c1.degree() > 0 || c2.degree() > 0)
        throw domain_error("theta mode commutator is not a constant");
      table.aa(i, j) = c1.constant_term();
      table.a_adag(i, j) = c2.constant_term();
    }
  return table;
}

}  // namespace nc
