#include "arboreal/squarefree.hpp"

#include "arboreal/gcd.hpp"

namespace arboreal {

Poly SquareFreeDecomposition::recompose() const {
  Poly r(unit);
  for (const auto& [f, m] : factors) r = r * f.pow(m);
  return r;
}

SquareFreeDecomposition squarefree_decompose(const Poly& g) {
  if (g.is_zero())
    throw std::domain_error("squarefree_decompose: zero polynomial");
  SquareFreeDecomposition out;
  out.unit = g.lc();
  if (g.is_constant()) return out;

  Poly f = g.monic();
  Poly df = f.derivative();
  Poly a0 = poly_gcd(f, df);
  Poly b = Poly::exact_div(f, a0);
  Poly c = Poly::exact_div(df, a0);
  Poly d = c - b.derivative();
  for (unsigned i = 1; b.deg() > 0; ++i) {
    Poly ai = poly_gcd(b, d);
    b = Poly::exact_div(b, ai);
    Poly cnext = Poly::exact_div(d, ai);
    d = cnext - b.derivative();
    if (ai.deg() > 0) out.factors.emplace_back(std::move(ai), i);
  }
  return out;
}

SquareFreeSplit squarefree_split(const Poly& g, bool coprimality_screen) {
  if (g.is_zero()) throw std::domain_error("squarefree_split: zero polynomial");
  if (g.is_constant()) return {Poly(Rat(1)), Poly(Rat(1)), g.lc()};

  Poly f = g.monic();
  if (poly_gcd(f, f.derivative(), coprimality_screen).is_constant()) {
    // Square-free input: the whole monic part is the obstruction.
    return {f, Poly(Rat(1)), g.lc()};
  }

  SquareFreeDecomposition dec = squarefree_decompose(g);
  Poly d(Rat(1));
  Poly y(Rat(1));
  for (const auto& [factor, mult] : dec.factors) {
    if (mult & 1) d = d * factor;
    if (mult / 2 > 0) y = y * factor.pow(mult / 2);
  }
  return {std::move(d), std::move(y), dec.unit};
}

std::optional<Poly> poly_sqrt_exact(const Poly& g) {
  if (g.is_zero()) return Poly();
  const int d = g.deg();
  if (d % 2 != 0) return std::nullopt;
  auto lroot = rat_sqrt(g.lc());
  if (!lroot) return std::nullopt;
  const std::size_t m = static_cast<std::size_t>(d) / 2;
  std::vector<Rat> r(m + 1, Rat(0));
  r[m] = *lroot;
  Rat inv2lead = 1 / (Rat(2) * r[m]);
  for (std::size_t k = m; k-- > 0;) {
    // Coefficient of t^(m+k) in r^2 must match g; everything above index k
    // is known already.
    Rat acc(0);
    for (std::size_t i = k + 1; i + 1 <= m; ++i) {
      std::size_t j = m + k - i;
      if (j > m || j <= k) continue;
      acc += r[i] * r[j];
    }
    r[k] = (g.coeff(m + k) - acc) * inv2lead;
  }
  Poly root(std::move(r));
  if (root * root == g) return root;
  return std::nullopt;
}

}  // namespace arboreal
