#include "nc/phase_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nc {

namespace {

void require_same_gens(const PhasePoly& a, const PhasePoly& b) {
  if (a.generators() != b.generators())
    throw dimension_error("polynomials over different generator sets");
}

}  // namespace

PhasePoly::PhasePoly(int generators) : gens_(generators) {
  if (generators <= 0)
    throw dimension_error("polynomial needs a positive generator count");
}

PhasePoly PhasePoly::constant(int generators, cdouble c) {
  PhasePoly p(generators);
  p.add_term(Monomial(generators, 0), c);
  return p;
}

PhasePoly PhasePoly::generator(int generators, int g, int power) {
  PhasePoly p(generators);
  if (g < 0 || g >= generators) throw dimension_error("generator index out of range");
  if (power < 0) throw domain_error("negative power");
  Monomial m(generators, 0);
  m[g] = power;
  p.add_term(m, 1.0);
  return p;
}

int PhasePoly::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

cdouble PhasePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? cdouble(0.0) : it->second;
}

cdouble PhasePoly::constant_term() const { return coeff(Monomial(gens_, 0)); }

void PhasePoly::add_term(const Monomial& m, cdouble c) {
  if (static_cast<int>(m.size()) != gens_)
    throw dimension_error("monomial length mismatch");
  if (c == cdouble(0.0, 0.0)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cdouble(0.0, 0.0)) terms_.erase(it);
  }
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  require_same_gens(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  require_same_gens(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PhasePoly& PhasePoly::operator*=(cdouble s) {
  if (s == cdouble(0.0, 0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PhasePoly PhasePoly::derivative(int g) const {
  if (g < 0 || g >= gens_) throw dimension_error("generator index out of range");
  PhasePoly r(gens_);
  for (const auto& [m, c] : terms_) {
    if (m[g] == 0) continue;
    Monomial d = m;
    d[g] -= 1;
    r.add_term(d, c * static_cast<double>(m[g]));
  }
  return r;
}

PhasePoly PhasePoly::pruned(double tol) const {
  PhasePoly r(gens_);
  for (const auto& [m, c] : terms_)
    if (std::abs(c) > tol) r.add_term(m, c);
  return r;
}

PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
PhasePoly operator*(cdouble s, PhasePoly a) { return a *= s; }

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  require_same_gens(a, b);
  PhasePoly r(a.generators());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      for (std::size_t g = 0; g < m.size(); ++g) m[g] += mb[g];
      r.add_term(m, ca * cb);
    }
  return r;
}

double max_coeff_diff(const PhasePoly& a, const PhasePoly& b) {
  require_same_gens(a, b);
  double m = 0.0;
  for (const auto& [mono, c] : a.terms())
    m = std::max(m, std::abs(c - b.coeff(mono)));
  for (const auto& [mono, c] : b.terms())
    m = std::max(m, std::abs(c - a.coeff(mono)));
  return m;
}

bool approx_equal(const PhasePoly& a, const PhasePoly& b, double tol) {
  return max_coeff_diff(a, b) <= tol;
}

}  // namespace nc
