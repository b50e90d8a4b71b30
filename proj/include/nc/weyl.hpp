#pragma once

// Weyl (symmetric-ordered) quantization on a truncated Fock basis. A symbol
// over 2n generators (x1..xn, p1..pn) maps to the average of the operator
// products over all orderings of its noncommuting factors. Factors from
// different modes commute, so the symmetrization factorizes mode by mode and
// only the small per-mode blocks are ever multiplied.

#include "nc/fock_basis.hpp"
#include "nc/phase_poly.hpp"

namespace nc {

OperatorMatrix weyl_quantize(const PhasePoly& f, const FockBasis& basis);

}  // namespace nc
