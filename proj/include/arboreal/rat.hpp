#ifndef ARBOREAL_RAT_HPP
#define ARBOREAL_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace arboreal {

// Exact rational scalar. mpq_class keeps the canonical form we rely on:
// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// True iff q is the square of a rational (0 counts).
bool rat_is_square(const Rat& q);

// Nonnegative exact square root, absent when q is not a square.
std::optional<Rat> rat_sqrt(const Rat& q);

// 2-adic valuation of n; n must be nonzero.
unsigned long ord2(const mpz_class& n);

// ceil(log2(n)) for n >= 1.
unsigned long ceil_log2(const mpz_class& n);

// "p" or "p/q", matching the input grammar.
std::string rat_to_string(const Rat& q);

}  // namespace arboreal

#endif
