#include "nc/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "nc/symbol_text.hpp"

namespace nc {

namespace {

cdouble parse_complex_token(const std::string& tok) {
  const auto comma = tok.find(',');
  if (comma == std::string::npos)
    throw parse_error("expected complex entry 're,im', got '" + tok + "'");
  std::size_t used = 0;
  double re, im;
  try {
    re = std::stod(tok.substr(0, comma), &used);
    im = std::stod(tok.substr(comma + 1), &used);
  } catch (const std::exception&) {
    throw parse_error("malformed complex entry '" + tok + "'");
  }
  return {re, im};
}

std::string format_complex_token(cdouble z) {
  return format_double(z.real()) + "," + format_double(z.imag());
}

double read_real(std::istream& in, const char* what) {
  double v;
  if (!(in >> v)) throw parse_error(std::string("expected ") + what);
  return v;
}

int read_int(std::istream& in, const char* what) {
  int v;
  if (!(in >> v)) throw parse_error(std::string("expected ") + what);
  return v;
}

cdouble read_complex(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) throw parse_error(std::string("expected ") + what);
  return parse_complex_token(tok);
}

ComplexMatrix read_block(std::istream& in, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = read_complex(in, "matrix entry");
  return m;
}

}  // namespace

std::string serialize_operator(const OperatorMatrix& op) {
  std::ostringstream out;
  out << "ncmatrix v1\n";
  out << "basis";
  for (const Mode& m : op.basis.modes())
    out << ' ' << (m.stat == Statistics::bose ? "bose" : "fermi") << ':'
        << m.cutoff;
  out << "\ndim " << op.mat.rows() << ' ' << op.mat.cols() << '\n';
  for (std::size_t i = 0; i < op.mat.rows(); ++i) {
    for (std::size_t j = 0; j < op.mat.cols(); ++j) {
      if (j) out << ' ';
      out << format_complex_token(op.mat(i, j));
    }
    out << '\n';
  }
  return out.str();
}

OperatorMatrix parse_operator(const std::string& text) {
  std::istringstream in(text);
  std::string magic, version;
  in >> magic >> version;
  if (magic != "ncmatrix" || version != "v1")
    throw parse_error("not an ncmatrix v1 payload");
  std::string kw;
  in >> kw;
  if (kw != "basis") throw parse_error("expected basis line");
  std::vector<Mode> modes;
  std::string tok;
  while (in >> tok) {
    if (tok == "dim") break;
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw parse_error("malformed mode '" + tok + "'");
    const std::string stat = tok.substr(0, colon);
    const int cutoff = std::stoi(tok.substr(colon + 1));
    if (stat == "bose")
      modes.push_back({Statistics::bose, cutoff});
    else if (stat == "fermi")
      modes.push_back({Statistics::fermi, cutoff});
    else
      throw parse_error("unknown statistics '" + stat + "'");
  }
  if (tok != "dim") throw parse_error("expected dim line");
  const int rows = read_int(in, "row count");
  const int cols = read_int(in, "column count");
  FockBasis basis(modes);
  if (rows != basis.dim() || cols != basis.dim())
    throw parse_error("dim line does not match the basis dimension");
  return OperatorMatrix{std::move(basis), read_block(in, rows, cols)};
}

Bivector read_bivector(std::istream& in) {
  const int n = read_int(in, "generator count");
  if (n <= 0) throw parse_error("generator count must be positive");
  std::vector<double> upper(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (auto& v : upper) v = read_real(in, "bivector entry");
  return Bivector::from_upper(n, upper);
}

BogoliubovTransform read_transform(std::istream& in) {
  const int m = read_int(in, "mode count");
  if (m <= 0) throw parse_error("mode count must be positive");
  BogoliubovTransform t;
  t.m = m;
  t.alpha = read_block(in, m, m);
  t.beta = read_block(in, m, m);
  t.gamma = read_block(in, m, m);
  t.delta = read_block(in, m, m);
  return t;
}

ComplexMatrix read_square_matrix(std::istream& in) {
  const int m = read_int(in, "matrix dimension");
  if (m <= 0) throw parse_error("matrix dimension must be positive");
  return read_block(in, m, m);
}

std::vector<cdouble> read_source(std::istream& in) {
  const int m = read_int(in, "source length");
  if (m <= 0) throw parse_error("source length must be positive");
  std::vector<cdouble> j(m);
  for (auto& v : j) v = read_complex(in, "source entry");
  return j;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return in;
}

}  // namespace

Bivector read_bivector_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_bivector(in);
}

BogoliubovTransform read_transform_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_transform(in);
}

ComplexMatrix read_square_matrix_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_square_matrix(in);
}

std::vector<cdouble> read_source_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_source(in);
}

}  // namespace nc
