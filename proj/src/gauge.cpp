#include "nc/gauge.hpp"

#include <cmath>

#include "nc/star_product.hpp"

namespace nc {

MatrixPoly::MatrixPoly(int d, int generators)
    : d_(d), gens_(generators), e_(static_cast<std::size_t>(d) * d,
                                   PhasePoly(generators)) {
  if (d <= 0) throw dimension_error("matrix symbol needs positive dimension");
}

MatrixPoly MatrixPoly::scalar(const PhasePoly& p) {
  MatrixPoly m(1, p.generators());
  m.at(0, 0) = p;
  return m;
}

PhasePoly& MatrixPoly::at(int i, int j) {
  if (i < 0 || i >= d_ || j < 0 || j >= d_)
    throw dimension_error("matrix symbol index out of range");
  return e_[static_cast<std::size_t>(i) * d_ + j];
}

const PhasePoly& MatrixPoly::at(int i, int j) const {
  return const_cast<MatrixPoly*>(this)->at(i, j);
}

MatrixPoly& MatrixPoly::operator+=(const MatrixPoly& o) {
  if (d_ != o.d_ || gens_ != o.gens_) throw dimension_error("matrix symbol mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

MatrixPoly& MatrixPoly::operator-=(const MatrixPoly& o) {
  if (d_ != o.d_ || gens_ != o.gens_) throw dimension_error("matrix symbol mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

MatrixPoly MatrixPoly::derivative(int g) const {
  MatrixPoly r(d_, gens_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) r.at(i, j) = at(i, j).derivative(g);
  return r;
}

MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { return a -= b; }

MatrixPoly scale(cdouble s, MatrixPoly a) {
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j) a.at(i, j) *= s;
  return a;
}

namespace {

template <typename EntryProduct>
MatrixPoly matrix_mul(const MatrixPoly& a, const MatrixPoly& b, EntryProduct prod) {
  if (a.d() != b.d() || a.generators() != b.generators())
    throw dimension_error("matrix symbol mismatch");
  MatrixPoly r(a.d(), a.generators());
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j)
      for (int k = 0; k < a.d(); ++k) r.at(i, j) += prod(a.at(i, k), b.at(k, j));
  return r;
}

}  // namespace

MatrixPoly star_mul(const MatrixPoly& a, const MatrixPoly& b, const Bivector& pi) {
  return matrix_mul(a, b, [&](const PhasePoly& f, const PhasePoly& g) {
    return star_product(f, g, pi);
  });
}

MatrixPoly pointwise_mul(const MatrixPoly& a, const MatrixPoly& b) {
  return matrix_mul(a, b,
                    [](const PhasePoly& f, const PhasePoly& g) { return f * g; });
}

MatrixPoly star_commutator(const MatrixPoly& a, const MatrixPoly& b,
                           const Bivector& pi) {
  return star_mul(a, b, pi) - star_mul(b, a, pi);
}

double max_coeff(const MatrixPoly& a) {
  double m = 0.0;
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j)
      for (const auto& [mono, c] : a.at(i, j).terms())
        m = std::max(m, std::abs(c));
  return m;
}

double max_coeff_diff(const MatrixPoly& a, const MatrixPoly& b) {
  if (a.d() != b.d()) throw dimension_error("matrix symbol mismatch");
  double m = 0.0;
  for (int i = 0; i < a.d(); ++i)
    for (int j = 0; j < a.d(); ++j)
      m = std::max(m, max_coeff_diff(a.at(i, j), b.at(i, j)));
  return m;
}

ThetaAdaptedRep theta_adapted_coordinates(const Bivector& theta, int cutoff) {
  const int n = theta.size();
  if (n % 2 != 0)
    throw singular_error("odd-dimensional bivectors are singular");
  if (cutoff < 2) throw dimension_error("cutoff must be at least 2");
  theta.inverse();  // existence check; throws singular_error otherwise

  // Darboux normal form theta = O blockdiag(theta_k eps) O^T from the
  // spectral decomposition of the symmetric matrix S = -theta^2: each
  // eigenvalue theta_k^2 carries an even-dimensional eigenspace closed under
  // theta, from which orthonormal pairs (theta u / theta_k, u) are drawn.
  std::vector<double> s(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc -= theta(i, k) * theta(k, j);
      s[static_cast<std::size_t>(i) * n + j] = acc;
    }
  const SymmetricEigen es = symmetric_eigs(s, n);

  std::vector<std::vector<double>> columns;  // Darboux basis, column-major
  std::vector<double> block_theta;
  std::vector<bool> used(n, false);
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double r = 0.0;
    for (int i = 0; i < n; ++i) r += a[i] * b[i];
    return r;
  };
  for (int j = 0; j < n; ++j) {
    if (used[j]) continue;
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = es.vectors[static_cast<std::size_t>(i) * n + j];
    // project out already-accepted columns (handles degenerate theta_k)
    for (const auto& c : columns) {
      const double d = dot(u, c);
      for (int i = 0; i < n; ++i) u[i] -= d * c[i];
    }
    double norm = std::sqrt(dot(u, u));
    if (norm < 1e-8) continue;
    for (int i = 0; i < n; ++i) u[i] /= norm;
    const double tk = std::sqrt(std::max(es.values[j], 0.0));
    if (tk < 1e-12) throw singular_error("bivector is not invertible");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) acc += theta(i, k) * u[k];
      v[i] = acc / tk;
    }
    columns.push_back(v);  // o_{2k}   (theta o1 = -tk o2, theta o2 = +tk o1)
    columns.push_back(u);  // o_{2k+1}
    block_theta.push_back(tk);
    used[j] = true;
  }
  if (static_cast<int>(columns.size()) != n)
    throw singular_error("Darboux reduction failed");

  const int nmodes = n / 2;
  FockBasis basis = FockBasis::bose(nmodes, cutoff);
  std::vector<ComplexMatrix> quad_x, quad_p;
  for (int k = 0; k < nmodes; ++k) {
    const ModeOperators ops = mode_operators(basis, k);
    quad_x.push_back(ops.x.mat);
    quad_p.push_back(ops.p.mat);
  }

  ThetaAdaptedRep rep{theta, basis, {}, {}};
  rep.linear_map.assign(n, std::vector<double>(2 * nmodes, 0.0));
  for (int i = 0; i < n; ++i) {
    ComplexMatrix xi(basis.dim(), basis.dim());
    for (int k = 0; k < nmodes; ++k) {
      const double root = std::sqrt(block_theta[k]);
      rep.linear_map[i][k] = root * columns[2 * k][i];
      rep.linear_map[i][nmodes + k] = root * columns[2 * k + 1][i];
      xi += cdouble(rep.linear_map[i][k]) * quad_x[k];
      xi += cdouble(rep.linear_map[i][nmodes + k]) * quad_p[k];
    }
    rep.coords.push_back({basis, std::move(xi)});
  }
  return rep;
}

PhasePoly adapt_coordinate_symbol(const ThetaAdaptedRep& rep, const PhasePoly& f) {
  const int n = rep.theta.size();
  if (f.generators() != n)
    throw dimension_error("symbol is not over the coordinate generators");
  const int gens = 2 * rep.basis.num_modes();
  std::vector<PhasePoly> image;
  for (int i = 0; i < n; ++i) {
    PhasePoly img(gens);
    for (int j = 0; j < gens; ++j) {
      if (rep.linear_map[i][j] == 0.0) continue;
      img += cdouble(rep.linear_map[i][j]) * PhasePoly::generator(gens, j);
    }
    image.push_back(std::move(img));
  }
  PhasePoly out(gens);
  for (const auto& [mono, coeff] : f.terms()) {
    PhasePoly term = PhasePoly::constant(gens, coeff);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < mono[i]; ++k) term = term * image[i];
    out += term;
  }
  return out;
}

CovariantCoords vacuum_coords(const ThetaAdaptedRep& rep, double g2) {
  if (g2 <= 0.0) throw domain_error("coupling g^2 must be positive");
  const Bivector inv = rep.theta.inverse();
  const int n = rep.theta.size();
  CovariantCoords cc{rep.theta, rep.basis, {}, g2};
  for (int i = 0; i < n; ++i) {
    ComplexMatrix ci(rep.basis.dim(), rep.basis.dim());
    for (int j = 0; j < n; ++j) {
      if (inv(i, j) == 0.0) continue;
      ci += cdouble(inv(i, j)) * rep.coords[j].mat;
    }
    cc.c.push_back({rep.basis, std::move(ci)});
  }
  return cc;
}

CovariantCoords vacuum_coords(const Bivector& theta, int cutoff, double g2) {
  return vacuum_coords(theta_adapted_coordinates(theta, cutoff), g2);
}

std::vector<std::vector<ComplexMatrix>> field_strength(const CovariantCoords& cc) {
  const int n = cc.theta.size();
  const Bivector inv = cc.theta.inverse();
  const int dim = cc.basis.dim();
  std::vector<std::vector<ComplexMatrix>> f(n,
                                            std::vector<ComplexMatrix>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        f[i][j] = ComplexMatrix(dim, dim);
        continue;
      }
      if (j < i) continue;
      ComplexMatrix fij = commutator(cc.c[i].mat, cc.c[j].mat);
      fij *= cdouble(0.0, -1.0);
      fij += cdouble(inv(i, j)) * ComplexMatrix::identity(dim);
      f[i][j] = fij;
      fij *= -1.0;
      f[j][i] = std::move(fij);
    }
  return f;
}

double ym_action(const CovariantCoords& cc, int margin) {
  const std::vector<int> keep = interior_indices(cc.basis, margin);
  const auto f = field_strength(cc);
  const int n = cc.theta.size();
  double total = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // Tr_interior(F F^+) = sum over kept rows of the row norms
      for (int k : keep) {
        const ComplexMatrix& fij = f[i][j];
        for (std::size_t l = 0; l < fij.cols(); ++l) {
          const cdouble v = fij(static_cast<std::size_t>(k), l);
          total += v.real() * v.real() + v.imag() * v.imag();
        }
      }
    }
  return total / (4.0 * cc.g2);
}

CovariantCoords gauge_transform(const CovariantCoords& cc, const ComplexMatrix& u) {
  if (u.rows() != static_cast<std::size_t>(cc.basis.dim()) || !u.square())
    throw dimension_error("gauge transform has wrong shape");
  const ComplexMatrix uu = matmul(u, adjoint(u));
  if (max_abs_diff(uu, ComplexMatrix::identity(cc.basis.dim())) > 1e-10)
    throw domain_error("gauge transform is not unitary");
  CovariantCoords out{cc.theta, cc.basis, {}, cc.g2};
  const ComplexMatrix ud = adjoint(u);
  for (const auto& ci : cc.c)
    out.c.push_back({cc.basis, matmul(matmul(u, ci.mat), ud)});
  return out;
}

MatrixPoly covariant_derivative(const MatrixPoly& f,
                                const std::vector<MatrixPoly>& gauge_field,
                                const Bivector& theta, int direction) {
  if (direction < 0 || direction >= theta.size())
    throw dimension_error("derivative direction out of range");
  if (static_cast<int>(gauge_field.size()) != theta.size())
    throw dimension_error("gauge field component count mismatch");
  MatrixPoly out = f.derivative(direction);
  out -= scale(cdouble(0.0, 1.0),
               star_commutator(gauge_field[direction], f, theta));
  return out;
}

std::vector<std::vector<MatrixPoly>> sw_field_strength(
    const std::vector<MatrixPoly>& gauge_field, const Bivector& theta,
    SwConvention convention) {
  const int n = theta.size();
  if (static_cast<int>(gauge_field.size()) != n)
    throw dimension_error("gauge field component count mismatch");
  const int d = gauge_field.front().d();
  const int gens = gauge_field.front().generators();
  const cdouble corr = convention == SwConvention::paper_imag_half
                           ? cdouble(0.0, 0.5)
                           : cdouble(0.5, 0.0);

  // precompute d_k A_i
  std::vector<std::vector<MatrixPoly>> da(
      n, std::vector<MatrixPoly>(n, MatrixPoly(d, gens)));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) da[k][i] = gauge_field[i].derivative(k);

  std::vector<std::vector<MatrixPoly>> f(
      n, std::vector<MatrixPoly>(n, MatrixPoly(d, gens)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MatrixPoly fij = da[i][j] - da[j][i];
      fij -= scale(cdouble(0.0, 1.0),
                   pointwise_mul(gauge_field[i], gauge_field[j]) -
                       pointwise_mul(gauge_field[j], gauge_field[i]));
      MatrixPoly corr_term(d, gens);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (theta(k, l) == 0.0) continue;
          corr_term += scale(cdouble(theta(k, l)),
                             pointwise_mul(da[k][i], da[l][j]) -
                                 pointwise_mul(da[k][j], da[l][i]));
        }
      fij += scale(corr, corr_term);
      f[i][j] = fij;
      f[j][i] = scale(cdouble(-1.0), std::move(fij));
    }
  return f;
}

}  // namespace nc
