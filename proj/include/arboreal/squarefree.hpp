#ifndef ARBOREAL_SQUAREFREE_HPP
#define ARBOREAL_SQUAREFREE_HPP

#include <optional>

#include "arboreal/poly.hpp"

namespace arboreal {

// unit * prod factor_i^mult_i reconstructs the input exactly; factors are
// monic, square-free and pairwise coprime.
struct SquareFreeDecomposition {
  Rat unit;
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly recompose() const;
};

// Yun's algorithm. Input must be nonzero.
SquareFreeDecomposition squarefree_decompose(const Poly& g);

// g = u * d * y^2 with d monic square-free, y monic, u a rational unit.
struct SquareFreeSplit {
  Poly d;
  Poly y;
  Rat u;
};

// The `coprimality_screen` flag lets the leading gcd(g, g') test use the
// modular certificate; when g is already square-free this skips the integer
// remainder sequence entirely.
SquareFreeSplit squarefree_split(const Poly& g, bool coprimality_screen = false);

// Exact square root with positive leading coefficient, absent when g is not
// a square in Q[t]. Degree/leading-coefficient screening followed by
// descending coefficient matching and a final verification.
std::optional<Poly> poly_sqrt_exact(const Poly& g);

}  // namespace arboreal

#endif
