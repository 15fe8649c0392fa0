#ifndef ARBOREAL_POLY_HPP
#define ARBOREAL_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arboreal/rat.hpp"

namespace arboreal {

// Dense univariate polynomial over Q, coefficients stored lowest degree
// first with a nonzero leading coefficient. The zero polynomial is the
// empty coefficient vector; its degree is the sentinel -1 and must never
// be fed into degree arithmetic.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& constant);
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  // The variable t.
  static Poly t();
  static Poly monomial(const Rat& a, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& lc() const;
  // Coefficient of t^i, zero beyond the degree.
  Rat coeff(std::size_t i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_monic() const;
  Poly monic() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Poly pow(unsigned long e) const;
  Rat eval(const Rat& x) const;
  Poly compose(const Poly& inner) const;
  // Multiply by t^k.
  Poly shifted(std::size_t k) const;

  // Division over the field Q: a = q*b + r with deg r < deg b. b nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  // Quotient of an exact division; throws std::domain_error on a remainder.
  static Poly exact_div(const Poly& a, const Poly& b);
  bool divides(const Poly& other) const;

  // Deterministic total order (degree, then coefficients); used only to
  // make reports canonical.
  static int compare(const Poly& a, const Poly& b);

 private:
  std::vector<Rat> c_;
  void trim();
};

// Multiplication kernels. mul_parallel splits the output coefficients
// across OpenMP threads; both return identical results and operator*
// dispatches on operand size.
Poly mul_serial(const Poly& a, const Poly& b);
Poly mul_parallel(const Poly& a, const Poly& b);

// Function-field height of a polynomial: its degree, with h(0) = 0 by fiat.
long height(const Poly& a);

}  // namespace arboreal

#endif
