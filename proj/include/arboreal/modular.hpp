#ifndef ARBOREAL_MODULAR_HPP
#define ARBOREAL_MODULAR_HPP

#include <cstdint>
#include <vector>

#include "arboreal/poly.hpp"

namespace arboreal {

// One-sided coprimality certificate over a random prime.
//
// If both leading coefficients survive reduction mod p and the gcd of the
// images is constant, then gcd(a, b) = 1 over Q -- exactly, since the degree
// of a gcd can only grow under reduction. A failed certificate proves
// nothing.
enum class CoprimalityResult { Certified, Unknown };

CoprimalityResult coprime_mod_prime(const std::vector<mpz_class>& a,
                                    const std::vector<mpz_class>& b,
                                    std::uint64_t p);

CoprimalityResult coprime_mod_prime(const Poly& a, const Poly& b,
                                    std::uint64_t p);

// Deterministic stream of ~62-bit primes; `seed` pins the stream so reports
// are reproducible bit-for-bit.
std::vector<std::uint64_t> deterministic_primes62(std::size_t count,
                                                  std::uint64_t seed);

}  // namespace arboreal

#endif
