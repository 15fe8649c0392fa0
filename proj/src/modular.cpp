#include "arboreal/modular.hpp"

#include <random>

#include "arboreal/gcd.hpp"

namespace arboreal {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

std::vector<u64> reduce_mod(const std::vector<mpz_class>& a, u64 p) {
  std::vector<u64> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// In-place remainder of a by b over F_p; b monic-normalized on the fly.
void rem_mod(std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  const std::size_t db = b.size() - 1;
  u64 inv = invmod(b.back(), p);
  while (a.size() > db) {
    u64 q = mulmod(a.back(), inv, p);
    if (q != 0) {
      std::size_t off = a.size() - 1 - db;
      for (std::size_t j = 0; j < db; ++j) {
        u64 sub = mulmod(q, b[j], p);
        u64& slot = a[off + j];
        slot = slot >= sub ? slot - sub : slot + p - sub;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) return;
  }
}

}  // namespace

CoprimalityResult coprime_mod_prime(const std::vector<mpz_class>& a,
                                    const std::vector<mpz_class>& b,
                                    u64 p) {
  if (a.empty() || b.empty()) return CoprimalityResult::Unknown;
  if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 ||
      mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0)
    return CoprimalityResult::Unknown;
  std::vector<u64> u = reduce_mod(a, p);
  std::vector<u64> v = reduce_mod(b, p);
  while (!v.empty() && v.size() > 1) {
    rem_mod(u, v, p);
    std::swap(u, v);
  }
  if (v.size() == 1) return CoprimalityResult::Certified;
  // v empty: u divides, gcd mod p nonconstant (or inputs degenerate).
  return u.size() == 1 ? CoprimalityResult::Certified
                       : CoprimalityResult::Unknown;
}

CoprimalityResult coprime_mod_prime(const Poly& a, const Poly& b, u64 p) {
  if (a.is_zero() || b.is_zero()) return CoprimalityResult::Unknown;
  if (a.is_constant() || b.is_constant()) return CoprimalityResult::Certified;
  return coprime_mod_prime(primitive_integer_form(a),
                           primitive_integer_form(b), p);
}

std::vector<u64> deterministic_primes62(std::size_t count, u64 seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<u64> primes;
  primes.reserve(count);
  mpz_class cand;
  while (primes.size() < count) {
    u64 x = (rng() | 1ULL) & ((1ULL << 62) - 1);
    x |= 1ULL << 61;
    cand = static_cast<unsigned long>(x);
    if (mpz_probab_prime_p(cand.get_mpz_t(), 30)) primes.push_back(x);
  }
  return primes;
}

}  // namespace arboreal
