#pragma once

// Moyal star product generated by a constant bivector, as the full
// bidifferential series exp((i/2) Pi^{ab} d_a (x) d_b). On polynomial
// symbols the series terminates at min(deg f, deg g), so the product is
// exact, associative, and reduces to the pointwise product at Pi = 0.

#include "nc/bivector.hpp"
#include "nc/phase_poly.hpp"

namespace nc {

PhasePoly star_product(const PhasePoly& f, const PhasePoly& g, const Bivector& pi);

// star(f,g) - star(g,f). For f = z^a this is i Pi^{ab} d_b g exactly.
PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g, const Bivector& pi);

// Leading bivector contraction Pi^{ab} d_a f d_b g; the classical limit
// lim_{s->0} moyal_bracket(f, g, s*Pi) / (i s).
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g, const Bivector& pi);

}  // namespace nc
