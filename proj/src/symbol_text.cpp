#include "nc/symbol_text.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace nc {

std::string GeneratorSpec::name(int g) const {
  if (g < 0 || g >= count()) throw dimension_error("generator index out of range");
  if (g < nx) return "x" + std::to_string(g + 1);
  return "p" + std::to_string(g - nx + 1);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(cdouble z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

namespace {

class Scanner {
 public:
  Scanner(const std::string& s, const GeneratorSpec& spec) : s_(s), spec_(spec) {}

  PhasePoly parse() {
    PhasePoly out(spec_.count());
    skip_ws();
    if (done()) throw parse_error("empty symbol text", pos_);
    bool first = true;
    while (!done()) {
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw parse_error("expected '+' or '-' between terms", pos_);
      }
      parse_term(sign, out);
      skip_ws();
      first = false;
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  double parse_number() {
    skip_ws();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw parse_error("expected a number", pos_);
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  // number, number 'i', or '(re[+-]imi)'
  cdouble parse_coeff() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      const double re = parse_number();
      skip_ws();
      double im = 0.0;
      if (peek() == '+' || peek() == '-') {
        const double s = peek() == '-' ? -1.0 : 1.0;
        ++pos_;
        im = s * parse_number();
        skip_ws();
        if (peek() != 'i') throw parse_error("expected 'i' in complex coefficient", pos_);
        ++pos_;
        skip_ws();
      }
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return {re, im};
    }
    const double v = parse_number();
    if (peek() == 'i') {
      ++pos_;
      return {0.0, v};
    }
    return {v, 0.0};
  }

  int parse_generator() {
    skip_ws();
    const std::size_t at = pos_;
    const char kind = peek();
    if (kind != 'x' && kind != 'p')
      throw parse_error("expected a generator name", at);
    ++pos_;
    std::size_t digits = 0;
    int num = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      num = num * 10 + (s_[pos_] - '0');
      ++pos_;
      ++digits;
    }
    if (digits == 0) throw parse_error("generator name needs an index", at);
    if (kind == 'x') {
      if (num < 1 || num > spec_.nx)
        throw parse_error("unknown generator 'x" + std::to_string(num) + "'", at);
      return num - 1;
    }
    if (num < 1 || num > spec_.np)
      throw parse_error("unknown generator 'p" + std::to_string(num) + "'", at);
    return spec_.nx + num - 1;
  }

  void parse_term(double sign, PhasePoly& out) {
    skip_ws();
    cdouble coeff(1.0, 0.0);
    bool saw_coeff = false;
    if (peek() == '(' || peek() == '.' ||
        std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
      saw_coeff = true;
    }
    Monomial m(spec_.count(), 0);
    bool saw_factor = false;
    for (;;) {
      skip_ws();
      bool after_star = false;
      if ((saw_coeff || saw_factor) && peek() == '*') {
        ++pos_;
        skip_ws();
        after_star = true;
      }
      if (peek() != 'x' && peek() != 'p') {
        if (after_star) throw parse_error("expected a generator after '*'", pos_);
        if (!saw_factor && !saw_coeff)
          throw parse_error("expected a coefficient or generator", pos_);
        break;
      }
      const int g = parse_generator();
      int power = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        power = 0;
        std::size_t digits = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          power = power * 10 + (s_[pos_] - '0');
          ++pos_;
          ++digits;
        }
        if (digits == 0) throw parse_error("expected an exponent", at);
      }
      m[g] += power;
      saw_factor = true;
    }
    out.add_term(m, sign * coeff);
  }

  const std::string& s_;
  const GeneratorSpec& spec_;
  std::size_t pos_ = 0;
};

}  // namespace

PhasePoly parse_symbol(const std::string& text, const GeneratorSpec& spec) {
  if (spec.count() <= 0) throw dimension_error("empty generator spec");
  return Scanner(text, spec).parse();
}

std::string render_symbol(const PhasePoly& p, const GeneratorSpec& spec) {
  if (p.generators() != spec.count())
    throw dimension_error("symbol/spec generator count mismatch");
  if (p.is_zero()) return "(0+0i)";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += " + ";
    out += "(" + format_complex(c) + ")";
    for (int g = 0; g < spec.count(); ++g) {
      if (m[g] == 0) continue;
      out += "*" + spec.name(g);
      if (m[g] > 1) out += "^" + std::to_string(m[g]);
    }
    first = false;
  }
  return out;
}

}  // namespace nc
