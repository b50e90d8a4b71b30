#pragma once

// Text grammar for polynomial symbols, shared by the CLI and test fixtures.
//
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := coeff ['*' factors] | factors
//   coeff  := number | number 'i' | '(' number [('+'|'-') number 'i'] ')'
//   factors:= gen ['^' int] ('*' gen ['^' int])*
//   gen    := 'x'<1..nx> | 'p'<1..np>
//
// Example: (0+2i)*x1^2*p1 - 3*x2

#include <string>

#include "nc/phase_poly.hpp"

namespace nc {

// Names the generators of a polynomial: indices [0, nx) are x1..xnx,
// indices [nx, nx+np) are p1..pnp.
struct GeneratorSpec {
  int nx = 0;
  int np = 0;
  int count() const { return nx + np; }
  std::string name(int g) const;
};

PhasePoly parse_symbol(const std::string& text, const GeneratorSpec& spec);

// Canonical rendering; parse_symbol(render_symbol(p)) reproduces p exactly
// (coefficients are printed with 17 significant digits).
std::string render_symbol(const PhasePoly& p, const GeneratorSpec& spec);

std::string format_double(double v);
std::string format_complex(cdouble z);  // "re+imi" / "re-imi"

}  // namespace nc
