#ifndef ARBOREAL_RATFUNC_HPP
#define ARBOREAL_RATFUNC_HPP

#include "arboreal/poly.hpp"

namespace arboreal {

// Element of K = Q(t), kept reduced: gcd(num, den) = 1 and den monic.
// Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rat(1)) {}
  explicit RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {}
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}
  RatFunc(Poly num, Poly den);  // reduces; throws on zero denominator

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }
  // Valid only when is_poly().
  const Poly& as_poly() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  RatFunc reciprocal() const;

  // Deterministic total order for canonical report output.
  static int compare(const RatFunc& a, const RatFunc& b);

 private:
  Poly num_;
  Poly den_;
  void reduce();
};

// max(deg num, deg den) on the reduced form; h(0) = 0.
long height(const RatFunc& a);

// True iff a is a square in Q(t)*; equivalent to num*den being a square in
// Q[t]. Zero input rejected.
bool is_square_ratfunc(const RatFunc& a);

// Exact square root in Q(t) with positive leading coefficient of the
// numerator part, absent when a is not a square.
std::optional<RatFunc> ratfunc_sqrt(const RatFunc& a);

// Evaluate a polynomial at a rational-function argument.
RatFunc eval_at(const Poly& p, const RatFunc& x);

}  // namespace arboreal

#endif
