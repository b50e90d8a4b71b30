#pragma once

// Covariant coordinates c_i = (theta^{-1})_ij x^j + A_i, the noncommutative
// field strength F_ij = -i[c_i, c_j] + (theta^{-1})_ij, the matrix Yang-Mills
// action over the interior block, and the symbol-level theta-corrected field
// strength. Gauge content enters only through the internal matrix dimension.

#include <vector>

#include "nc/bivector.hpp"
#include "nc/fock_basis.hpp"
#include "nc/phase_poly.hpp"

namespace nc {

// d x d matrix of polynomial symbols over one generator set.
class MatrixPoly {
 public:
  MatrixPoly(int d, int generators);
  static MatrixPoly scalar(const PhasePoly& p);  // d = 1

  int d() const { return d_; }
  int generators() const { return gens_; }
  PhasePoly& at(int i, int j);
  const PhasePoly& at(int i, int j) const;

  MatrixPoly& operator+=(const MatrixPoly& o);
  MatrixPoly& operator-=(const MatrixPoly& o);
  MatrixPoly derivative(int g) const;

 private:
  int d_, gens_;
  std::vector<PhasePoly> e_;
};

MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b);
MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b);
MatrixPoly scale(cdouble s, MatrixPoly a);

// Matrix composition with star products (resp. pointwise products) between
// entries.
MatrixPoly star_mul(const MatrixPoly& a, const MatrixPoly& b, const Bivector& pi);
MatrixPoly pointwise_mul(const MatrixPoly& a, const MatrixPoly& b);
MatrixPoly star_commutator(const MatrixPoly& a, const MatrixPoly& b,
                           const Bivector& pi);

double max_coeff(const MatrixPoly& a);
double max_coeff_diff(const MatrixPoly& a, const MatrixPoly& b);

// Representation of n coordinates with [x^i, x^j] = i theta^{ij} on the
// interior block, built from n/2 canonical bose modes through the Darboux
// normal form of theta. n must be even and theta invertible.
struct ThetaAdaptedRep {
  Bivector theta;
  FockBasis basis;
  std::vector<OperatorMatrix> coords;
  // x^i = sum_j map[i][j] * (mode generator j), generators ordered
  // (x_1..x_m, p_1..p_m) over the m = n/2 modes.
  std::vector<std::vector<double>> linear_map;
};

ThetaAdaptedRep theta_adapted_coordinates(const Bivector& theta, int cutoff);

// Rewrite a symbol in the coordinates x^1..x^n as a symbol in the mode
// generators of the adapted representation (substitution through linear_map).
PhasePoly adapt_coordinate_symbol(const ThetaAdaptedRep& rep, const PhasePoly& f);

struct CovariantCoords {
  Bivector theta;
  FockBasis basis;
  std::vector<OperatorMatrix> c;
  double g2 = 1.0;  // coupling constant squared
};

// Vacuum configuration c_i = (theta^{-1})_ij x^j on a theta-adapted basis.
CovariantCoords vacuum_coords(const Bivector& theta, int cutoff, double g2 = 1.0);
CovariantCoords vacuum_coords(const ThetaAdaptedRep& rep, double g2 = 1.0);

// F[i][j] = -i (c_i c_j - c_j c_i) + (theta^{-1})_ij * I.
std::vector<std::vector<ComplexMatrix>> field_strength(const CovariantCoords& cc);

// (1 / 4 g^2) sum_{i != j} Tr_interior(F_ij F_ij^+); nonnegative, zero on the
// vacuum.
double ym_action(const CovariantCoords& cc, int margin = 2);

// c_i -> U c_i U^+ after checking ||U U^+ - I|| <= 1e-10.
CovariantCoords gauge_transform(const CovariantCoords& cc, const ComplexMatrix& u);

// nabla_i f = d_i f - i (A_i * f - f * A_i), star products throughout.
MatrixPoly covariant_derivative(const MatrixPoly& f,
                                const std::vector<MatrixPoly>& gauge_field,
                                const Bivector& theta, int direction);

enum class SwConvention {
  paper_imag_half,  // + (i/2) theta^{kl} [d_k A_i d_l A_j - d_k A_j d_l A_i]
  real_half         // the same correction with coefficient 1/2
};

// F_ij = d_i A_j - d_j A_i - i [A_i, A_j] + theta-correction, pointwise
// matrix products (the correction is the first-order star expansion).
std::vector<std::vector<MatrixPoly>> sw_field_strength(
    const std::vector<MatrixPoly>& gauge_field, const Bivector& theta,
    SwConvention convention = SwConvention::paper_imag_half);

}  // namespace nc
