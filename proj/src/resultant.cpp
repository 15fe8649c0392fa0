#include "arboreal/resultant.hpp"

#include "arboreal/gcd.hpp"

namespace arboreal {

namespace {

// Pseudo-remainder in (Q[t])[x]: lc_x(B)^(deg A - deg B + 1) * A mod B.
BiPoly prem_x(const BiPoly& A, const BiPoly& B) {
  std::vector<Poly> r = A.coeffs_x();
  const auto& b = B.coeffs_x();
  const std::size_t db = b.size() - 1;
  const Poly& l = b.back();
  while (r.size() > db) {
    Poly top = r.back();
    r.pop_back();
    for (auto& p : r) p = l * p;
    std::size_t off = r.size() - db;
    for (std::size_t j = 0; j < db; ++j) r[off + j] -= top * b[j];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (r.empty()) break;
  }
  return BiPoly(std::move(r));
}

BiPoly div_coeffs(const BiPoly& A, const Poly& d) {
  std::vector<Poly> c = A.coeffs_x();
  for (auto& p : c)
    if (!p.is_zero()) p = Poly::exact_div(p, d);
  return BiPoly(std::move(c));
}

Poly content_x(const BiPoly& A) {
  Poly g;
  for (const auto& p : A.coeffs_x()) {
    g = poly_gcd(g, p);
    if (g == Poly(Rat(1))) break;
  }
  return g;
}

}  // namespace

Poly resultant_x(const BiPoly& A_in, const BiPoly& B_in) {
  if (A_in.is_zero() || B_in.is_zero())
    throw std::invalid_argument("resultant_x: zero input");

  BiPoly A = A_in;
  BiPoly B = B_in;
  int sign = 1;
  if (A.deg_x() < B.deg_x()) {
    if ((A.deg_x() & 1) && (B.deg_x() & 1)) sign = -sign;
    std::swap(A, B);
  }
  if (A.deg_x() == 0) return Poly(Rat(1));
  if (B.deg_x() == 0) {
    Poly r = B.coeff_x(0).pow(static_cast<unsigned long>(A.deg_x()));
    return sign < 0 ? -r : r;
  }

  Poly ca = content_x(A);
  Poly cb = content_x(B);
  if (ca.deg() > 0) A = div_coeffs(A, ca);
  if (cb.deg() > 0) B = div_coeffs(B, cb);
  Poly content_fix = ca.pow(static_cast<unsigned long>(B.deg_x())) *
                     cb.pow(static_cast<unsigned long>(A.deg_x()));

  Poly g(Rat(1));
  Poly h(Rat(1));
  for (;;) {
    const int da = A.deg_x();
    const int db = B.deg_x();
    const unsigned long delta = static_cast<unsigned long>(da - db);
    if ((da & 1) && (db & 1)) sign = -sign;

    BiPoly R = prem_x(A, B);
    A = B;
    if (R.is_zero()) return Poly();  // nonconstant common factor
    Poly divisor = g * h.pow(delta);
    B = div_coeffs(R, divisor);

    g = A.lc_x();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = Poly::exact_div(g.pow(delta), h.pow(delta - 1));
    }
    if (B.deg_x() == 0) break;
  }

  const unsigned long q = static_cast<unsigned long>(A.deg_x());
  Poly res = B.coeff_x(0).pow(q);
  if (q >= 1) res = Poly::exact_div(res, h.pow(q - 1));
  res = content_fix * res;
  return sign < 0 ? -res : res;
}

Poly disc_x(const BiPoly& A) {
  const int d = A.deg_x();
  if (d < 1) throw std::invalid_argument("disc_x: constant in x");
  Poly r = resultant_x(A, A.derivative_x());
  r = Poly::exact_div(r, A.lc_x());
  // (-1)^(d(d-1)/2)
  if (((static_cast<long>(d) * (d - 1)) / 2) % 2 != 0) r = -r;
  return r;
}

Poly disc_t_shifted(const Poly& c) {
  if (c.deg() < 1) throw std::invalid_argument("disc_t_shifted: constant input");
  // View c(t) + s in (Q[s])[t]: same machinery with the variable roles
  // swapped; the inner Poly layer now carries s.
  std::vector<Poly> coeffs(static_cast<std::size_t>(c.deg()) + 1);
  coeffs[0] = Poly({c.coeff(0), Rat(1)});  // c_0 + s
  for (std::size_t i = 1; i < coeffs.size(); ++i) coeffs[i] = Poly(c.coeff(i));
  return disc_x(BiPoly(std::move(coeffs)));
}

}  // namespace arboreal
