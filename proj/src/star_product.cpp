#include "nc/star_product.hpp"

#include <vector>

namespace nc {

namespace {

void require_compatible(const PhasePoly& f, const PhasePoly& g, const Bivector& pi) {
  if (f.generators() != g.generators() || f.generators() != pi.size())
    throw dimension_error("star product: generator set mismatch");
}

struct PiEntry {
  int a, b;
  double v;
};

// Falling factorial alpha! / (alpha - r)!, zero when r exceeds alpha.
double falling(int alpha, int r) {
  double f = 1.0;
  for (int k = 0; k < r; ++k) f *= static_cast<double>(alpha - k);
  return f;
}

// Enumerates multiplicity assignments over the nonzero Pi entries for one
// monomial pair. `rem_f` / `rem_g` track how many derivatives each
// generator can still absorb on the left / right factor.
void star_mono(const std::vector<PiEntry>& entries, std::size_t e,
               const Monomial& mf, const Monomial& mg, std::vector<int>& used_f,
               std::vector<int>& used_g, int order, cdouble factor,
               cdouble base, PhasePoly& out) {
  if (e == entries.size()) {
    // (i/2)^order and the falling factorials from the derivatives
    cdouble c = base * factor;
    for (int k = 0; k < order; ++k) c *= cdouble(0.0, 0.5);
    Monomial m(mf.size());
    for (std::size_t g = 0; g < mf.size(); ++g) {
      c *= falling(mf[g], used_f[g]) * falling(mg[g], used_g[g]);
      m[g] = mf[g] - used_f[g] + mg[g] - used_g[g];
    }
    out.add_term(m, c);
    return;
  }
  const PiEntry& en = entries[e];
  const int cap = std::min(mf[en.a] - used_f[en.a], mg[en.b] - used_g[en.b]);
  cdouble f = factor;
  for (int m = 0; m <= cap; ++m) {
    if (m > 0) {
      f *= en.v / static_cast<double>(m);  // accumulates v^m / m!
      used_f[en.a] += 1;
      used_g[en.b] += 1;
    }
    star_mono(entries, e + 1, mf, mg, used_f, used_g, order + m, f, base, out);
  }
  used_f[en.a] -= cap;
  used_g[en.b] -= cap;
}

}  // namespace

PhasePoly star_product(const PhasePoly& f, const PhasePoly& g, const Bivector& pi) {
  require_compatible(f, g, pi);
  const int n = pi.size();

  std::vector<PiEntry> entries;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && pi(a, b) != 0.0) entries.push_back({a, b, pi(a, b)});

  PhasePoly out(f.generators());
  std::vector<int> used_f(n, 0), used_g(n, 0);
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms())
      star_mono(entries, 0, mf, mg, used_f, used_g, 0, cdouble(1.0), cf * cg, out);
  return out;
}

PhasePoly moyal_bracket(const PhasePoly& f, const PhasePoly& g, const Bivector& pi) {
  return star_product(f, g, pi) - star_product(g, f, pi);
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g, const Bivector& pi) {
  require_compatible(f, g, pi);
  const int n = pi.size();
  PhasePoly out(f.generators());
  for (int a = 0; a < n; ++a) {
    const PhasePoly df = f.derivative(a);
    if (df.is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (pi(a, b) == 0.0) continue;
      const PhasePoly dg = g.derivative(b);
      if (dg.is_zero()) continue;
      out += cdouble(pi(a, b)) * (df * dg);
    }
  }
  return out;
}

}  // namespace nc
