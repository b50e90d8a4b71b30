#pragma once

// Text formats shared by the CLI and the golden-file tests.
//
// OperatorMatrix:
//   ncmatrix v1
//   basis <stat>:<cutoff> [<stat>:<cutoff> ...]
//   dim <rows> <cols>
//   <re>,<im> <re>,<im> ...        (one row per line)
//
// Bivector file: n followed by the n(n-1)/2 upper-triangle entries row-major.
// Transform file: m followed by the four m x m complex blocks (alpha, beta,
// gamma, delta) row-major, entries as re,im.
// Square complex matrix file: m followed by m x m entries as re,im.
// Source file: m followed by m entries as re,im.

#include <iosfwd>
#include <string>

#include "nc/bivector.hpp"
#include "nc/bogoliubov.hpp"
#include "nc/fock_basis.hpp"

namespace nc {

std::string serialize_operator(const OperatorMatrix& op);
OperatorMatrix parse_operator(const std::string& text);

Bivector read_bivector(std::istream& in);
BogoliubovTransform read_transform(std::istream& in);
ComplexMatrix read_square_matrix(std::istream& in);
std::vector<cdouble> read_source(std::istream& in);

Bivector read_bivector_file(const std::string& path);
BogoliubovTransform read_transform_file(const std::string& path);
ComplexMatrix read_square_matrix_file(const std::string& path);
std::vector<cdouble> read_source_file(const std::string& path);

}  // namespace nc
