#include "arboreal/bipoly.hpp"

#include <algorithm>

namespace arboreal {

BiPoly::BiPoly(Poly constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

BiPoly::BiPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

BiPoly BiPoly::x() { return BiPoly({Poly(), Poly(Rat(1))}); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& BiPoly::lc_x() const {
  if (c_.empty()) throw std::domain_error("lc_x of zero polynomial");
  return c_.back();
}

Poly BiPoly::coeff_x(std::size_t i) const {
  if (i >= c_.size()) return Poly();
  return c_[i];
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return BiPoly(std::move(c));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return BiPoly(std::move(c));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<Poly> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(c));
}

BiPoly operator*(const Poly& s, const BiPoly& a) {
  if (s.is_zero()) return BiPoly();
  std::vector<Poly> c = a.c_;
  for (auto& p : c) p = s * p;
  return BiPoly(std::move(c));
}

BiPoly BiPoly::derivative_x() const {
  if (c_.size() <= 1) return BiPoly();
  std::vector<Poly> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return BiPoly(std::move(c));
}

BiPoly BiPoly::compose_x(const BiPoly& inner) const {
  BiPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + BiPoly(c_[i]);
  return acc;
}

Poly BiPoly::eval_x(const Poly& v) const {
  Poly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc;
}

}  // namespace arboreal
