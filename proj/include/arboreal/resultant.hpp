#ifndef ARBOREAL_RESULTANT_HPP
#define ARBOREAL_RESULTANT_HPP

#include "arboreal/bipoly.hpp"

namespace arboreal {

// Resultant with respect to x over Q[t], by the subresultant remainder
// sequence (exact divisions only). Standard orientation:
// Res_x(x - p, x - q) = p - q. Zero inputs rejected.
Poly resultant_x(const BiPoly& A, const BiPoly& B);

// Discriminant in x with the fixed normalization
//   disc(A) = (-1)^(d(d-1)/2) * Res_x(A, A') / lc_x(A),   d = deg_x(A) >= 1.
// In particular disc((x - g)^2 + c) = -4c. Constant-in-x input rejected.
Poly disc_x(const BiPoly& A);

// p(s) = disc_t(c(t) + s) as a polynomial in the fresh indeterminate s;
// deg p = deg c - 1. Constant c rejected.
Poly disc_t_shifted(const Poly& c);

}  // namespace arboreal

#endif
