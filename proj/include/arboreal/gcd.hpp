#ifndef ARBOREAL_GCD_HPP
#define ARBOREAL_GCD_HPP

#include "arboreal/poly.hpp"

namespace arboreal {

// Monic greatest common divisor over Q[t]. Computed as a primitive-part
// pseudo-remainder sequence over Z after clearing denominators, which keeps
// intermediate coefficients at subresultant size. gcd(0, 0) = 0 and
// gcd(a, 0) = monic(a).
//
// With `coprimality_screen` set, a single modular coprimality certificate
// (random 62-bit prime, non-vanishing leading coefficients) is tried first;
// when it fires the result 1 is exact and the integer PRS is skipped. The
// screen is one-sided and never changes the result.
Poly poly_gcd(const Poly& a, const Poly& b, bool coprimality_screen = false);

// Integer image of a rational polynomial: primitive, positive leading
// coefficient. Exposed for the modular certificates.
std::vector<mpz_class> primitive_integer_form(const Poly& a);

}  // namespace arboreal

#endif
