#include "arboreal/poly.hpp"

#include <algorithm>

namespace arboreal {

namespace {
const Rat kZero(0);
}

bool rat_is_square(const Rat& q) {
  if (sgn(q) < 0) return false;
  if (sgn(q) == 0) return true;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(q.get_den().get_mpz_t());
}

std::optional<Rat> rat_sqrt(const Rat& q) {
  if (!rat_is_square(q)) return std::nullopt;
  Rat r;
  mpz_sqrt(r.get_num().get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(r.get_den().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

unsigned long ord2(const mpz_class& n) {
  if (n == 0) throw std::domain_error("ord2: zero input");
  return mpz_scan1(n.get_mpz_t(), 0);
}

unsigned long ceil_log2(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("ceil_log2: input must be positive");
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  // n is a power of two exactly when it has a single set bit.
  if (mpz_popcount(n.get_mpz_t()) == 1) return bits - 1;
  return bits;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Poly::Poly(const Rat& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::t() { return Poly({Rat(0), Rat(1)}); }

Poly Poly::monomial(const Rat& a, std::size_t k) {
  if (sgn(a) == 0) return Poly();
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = a;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& Poly::lc() const {
  if (c_.empty()) throw std::domain_error("lc of zero polynomial");
  return c_.back();
}

Rat Poly::coeff(std::size_t i) const {
  if (i >= c_.size()) return kZero;
  return c_[i];
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("monic of zero polynomial");
  if (is_monic()) return *this;
  Poly r = *this;
  Rat inv = 1 / c_.back();
  for (auto& q : r.c_) q *= inv;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly mul_serial(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Rat> c(ac.size() + bc.size() - 1, Rat(0));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (sgn(ac[i]) == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] += ac[i] * bc[j];
  }
  return Poly(std::move(c));
}

Poly mul_parallel(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t na = ac.size();
  const std::size_t nb = bc.size();
  std::vector<Rat> c(na + nb - 1, Rat(0));
  // Each output coefficient is an independent dot product; GMP values are
  // safe to read concurrently and every thread writes distinct slots.
  const long n = static_cast<long>(c.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < n; ++k) {
    Rat acc(0);
    const std::size_t uk = static_cast<std::size_t>(k);
    const std::size_t ilo = uk >= nb - 1 ? uk - (nb - 1) : 0;
    const std::size_t ihi = std::min(uk, na - 1);
    for (std::size_t i = ilo; i <= ihi; ++i) acc += ac[i] * bc[uk - i];
    c[uk] = std::move(acc);
  }
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  // Work estimate below which threading overhead dominates.
  if (a.coeffs().size() * b.coeffs().size() >= 1 << 14)
    return mul_parallel(a, b);
  return mul_serial(a, b);
}

Poly operator*(const Rat& s, const Poly& a) {
  if (sgn(s) == 0) return Poly();
  std::vector<Rat> c = a.coeffs();
  for (auto& q : c) q *= s;
  return Poly(std::move(c));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
  return Poly(std::move(c));
}

Poly Poly::pow(unsigned long e) const {
  Poly r(Rat(1));
  Poly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
  return acc;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> c(c_.size() + k, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.deg() < b.deg()) return {Poly(), a};
  std::vector<Rat> rem = a.c_;
  const int db = b.deg();
  std::vector<Rat> quo(a.c_.size() - b.c_.size() + 1, Rat(0));
  Rat inv = 1 / b.lc();
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    if (sgn(rem[k]) == 0) continue;
    Rat q = rem[k] * inv;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: division not exact");
  return q;
}

bool Poly::divides(const Poly& other) const {
  if (is_zero()) return other.is_zero();
  return divrem(other, *this).second.is_zero();
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

long height(const Poly& a) { return a.is_zero() ? 0 : a.deg(); }

}  // namespace arboreal
