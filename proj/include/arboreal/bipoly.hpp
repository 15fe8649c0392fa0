#ifndef ARBOREAL_BIPOLY_HPP
#define ARBOREAL_BIPOLY_HPP

#include "arboreal/poly.hpp"

namespace arboreal {

// Polynomial in x with coefficients in Q[t], stored lowest x-degree first
// with a nonzero leading coefficient. Models iterates of a quadratic map
// viewed in (Q[t])[x]; also reused with the roles of the variables swapped
// when a discriminant in t is needed.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Poly constant);
  explicit BiPoly(std::vector<Poly> coeffs);

  static BiPoly x();

  bool is_zero() const { return c_.empty(); }
  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  const Poly& lc_x() const;
  Poly coeff_x(std::size_t i) const;
  const std::vector<Poly>& coeffs_x() const { return c_; }

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Poly& s, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly derivative_x() const;
  // Substitute x := inner.
  BiPoly compose_x(const BiPoly& inner) const;
  // Substitute x := v in Q[t].
  Poly eval_x(const Poly& v) const;

 private:
  std::vector<Poly> c_;
  void trim();
};

}  // namespace arboreal

#endif
