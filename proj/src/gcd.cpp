#include "arboreal/gcd.hpp"

#include <algorithm>

#include "arboreal/modular.hpp"

namespace arboreal {

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zdiv_scalar(ZPoly& a, const mpz_class& d) {
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

void make_primitive(ZPoly& a) {
  if (a.empty()) return;
  mpz_class g = zcontent(a);
  if (sgn(a.back()) < 0) g = -g;
  if (g != 1) zdiv_scalar(a, g);
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed in place.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& l = b.back();
  while (a.size() > db) {
    mpz_class top = a.back();
    a.pop_back();
    for (auto& c : a) c *= l;
    std::size_t off = a.size() - db;
    for (std::size_t j = 0; j < db; ++j) a[off + j] -= top * b[j];
    ztrim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

std::vector<mpz_class> primitive_integer_form(const Poly& a) {
  ZPoly r;
  if (a.is_zero()) return r;
  mpz_class den_lcm = 1;
  for (const auto& q : a.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  r.reserve(a.coeffs().size());
  for (const auto& q : a.coeffs()) {
    mpz_class c = q.get_num() * (den_lcm / q.get_den());
    r.push_back(std::move(c));
  }
  make_primitive(r);
  return r;
}

Poly poly_gcd(const Poly& a, const Poly& b, bool coprimality_screen) {
  if (a.is_zero() && b.is_zero()) return Poly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

  ZPoly u = primitive_integer_form(a);
  ZPoly v = primitive_integer_form(b);

  if (coprimality_screen) {
    auto primes = deterministic_primes62(1, 0x67cd0001u);
    if (coprime_mod_prime(u, v, primes[0]) == CoprimalityResult::Certified)
      return Poly(Rat(1));
  }

  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    if (v.size() == 1) return Poly(Rat(1));
    ZPoly r = zprem(u, v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }

  std::vector<Rat> c(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) c[i] = Rat(u[i]);
  return Poly(std::move(c)).monic();
}

}  // namespace arboreal
