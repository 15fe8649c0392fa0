#include "arboreal/ratfunc.hpp"

#include "arboreal/gcd.hpp"
#include "arboreal/squarefree.hpp"

namespace arboreal {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = Poly::exact_div(num_, g);
    den_ = Poly::exact_div(den_, g);
  }
  if (!den_.is_monic()) {
    Rat inv = 1 / den_.lc();
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

const Poly& RatFunc::as_poly() const {
  if (!is_poly()) throw std::domain_error("RatFunc: not a polynomial");
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::reciprocal() const {
  if (is_zero()) throw std::domain_error("RatFunc: reciprocal of zero");
  return RatFunc(den_, num_);
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
  int c = Poly::compare(a.den_, b.den_);
  if (c != 0) return c;
  return Poly::compare(a.num_, b.num_);
}

long height(const RatFunc& a) {
  if (a.is_zero()) return 0;
  return std::max(height(a.num()), height(a.den()));
}

bool is_square_ratfunc(const RatFunc& a) {
  if (a.is_zero()) throw std::domain_error("is_square_ratfunc: zero input");
  return poly_sqrt_exact(a.num() * a.den()).has_value();
}

std::optional<RatFunc> ratfunc_sqrt(const RatFunc& a) {
  if (a.is_zero()) return RatFunc();
  // Reduced form: a square iff numerator and (monic) denominator are both
  // squares in Q[t].
  auto rn = poly_sqrt_exact(a.num());
  if (!rn) return std::nullopt;
  auto rd = poly_sqrt_exact(a.den());
  if (!rd) return std::nullopt;
  return RatFunc(std::move(*rn), std::move(*rd));
}

RatFunc eval_at(const Poly& p, const RatFunc& x) {
  RatFunc acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * x + RatFunc(p.coeffs()[i]);
  }
  return acc;
}

}  // namespace arboreal
