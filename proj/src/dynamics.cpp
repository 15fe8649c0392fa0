#include "arboreal/dynamics.hpp"

#include <cmath>

namespace arboreal {

namespace {
void check_small_level(unsigned m) {
  if (m > 62) throw std::domain_error("height prediction: level too large");
}
}  // namespace

Poly QuadMap::apply(const Poly& x) const {
  Poly w = x - gamma;
  return w * w + c;
}

RatFunc QuadMap::apply(const RatFunc& x) const {
  RatFunc w = x - RatFunc(gamma);
  return w * w + RatFunc(c);
}

BiPoly QuadMap::as_bipoly() const {
  // (x - gamma)^2 + c = x^2 - 2*gamma*x + (gamma^2 + c)
  return BiPoly({gamma * gamma + c, Rat(-2) * gamma, Poly(Rat(1))});
}

BiPoly QuadMap::iterate_bipoly(unsigned n) const {
  if (n == 0) return BiPoly::x();
  BiPoly phi = as_bipoly();
  BiPoly acc = phi;
  for (unsigned i = 1; i < n; ++i) acc = acc.compose_x(phi);
  return acc;
}

RatFunc QuadMapOverK::apply(const RatFunc& x) const {
  RatFunc w = x - gamma;
  return w * w + c;
}

Poly iterate_at(const QuadMap& phi, const Poly& x0, unsigned n) {
  Poly v = x0;
  for (unsigned i = 0; i < n; ++i) v = phi.apply(v);
  return v;
}

RatFunc iterate_at(const QuadMap& phi, const RatFunc& x0, unsigned n) {
  RatFunc v = x0;
  for (unsigned i = 0; i < n; ++i) v = phi.apply(v);
  return v;
}

RatFunc iterate_at(const QuadMapOverK& phi, const RatFunc& x0, unsigned n) {
  RatFunc v = x0;
  for (unsigned i = 0; i < n; ++i) v = phi.apply(v);
  return v;
}

std::vector<Poly> critical_orbit(const QuadMap& phi, unsigned N) {
  std::vector<Poly> orbit;
  orbit.reserve(N);
  Poly v = phi.gamma;
  for (unsigned i = 0; i < N; ++i) {
    v = phi.apply(v);
    orbit.push_back(v);
  }
  return orbit;
}

std::vector<Poly> zero_orbit(const QuadMap& phi, unsigned N) {
  std::vector<Poly> orbit;
  orbit.reserve(N);
  Poly v;
  for (unsigned i = 0; i < N; ++i) {
    v = phi.apply(v);
    orbit.push_back(v);
  }
  return orbit;
}

HeightPrediction predict_height_critical(const QuadMap& phi, unsigned m) {
  if (m == 0) throw std::invalid_argument("predict_height_critical: m = 0");
  check_small_level(m);
  const long hg = phi.h_gamma();
  const long hc = phi.h_c();
  const long hb = height(phi.b());
  if (hb == 0) {
    // Isotrivial: the orbit is c + constant.
    return {PredictionKind::Exact, phi.h_gamma()};
  }
  if (hg != hc) {
    if (m == 1) return {PredictionKind::UpperBound, phi.h()};
    // 2^(m-1) * h(phi)
    return {PredictionKind::Exact, (1L << (m - 1)) * phi.h()};
  }
  // Equal heights, non-isotrivial: h(phi^m(gamma)) = max(2^(m-1)h(b), h(c))
  // when the two sides differ, an upper bound at the crossover.
  const long scaled = (1L << (m - 1)) * hb;
  if (scaled != hc) return {PredictionKind::Exact, std::max(scaled, hc)};
  return {PredictionKind::UpperBound, hc};
}

HeightPrediction predict_height_zero(const QuadMap& phi, unsigned m) {
  if (m == 0) throw std::invalid_argument("predict_height_zero: m = 0");
  check_small_level(m);
  const long hg = phi.h_gamma();
  const long hc = phi.h_c();
  if (phi.h() == 0) return {PredictionKind::Exact, 0};
  if (hg == hc) {
    // h(phi(0)) = 2h(gamma) and each further step squares the degree.
    return {PredictionKind::Exact, (1L << m) * hg};
  }
  return {PredictionKind::UpperBound, (1L << m) * phi.h()};
}

RhoInfo rho(const QuadMap& phi) {
  const long hg = phi.h_gamma();
  const long hb = height(phi.b());
  if (phi.h_gamma() != phi.h_c() || hb == 0)
    throw std::invalid_argument("rho: requires h(gamma) = h(c) and h(gamma-c) > 0");
  return {hg, hb, std::log2(static_cast<double>(hg) / static_cast<double>(hb)) + 1.0};
}

bool beyond_rho(const QuadMap& phi, unsigned m) {
  RhoInfo r = rho(phi);
  if (m == 0) return false;
  // m > rho  <=>  2^(m-1) * h(b) > h(gamma)
  return (mpz_class(1) << (m - 1)) * r.h_b > r.h_gamma;
}

std::vector<Rat> isotrivial_orbit_constants(const QuadMap& phi, unsigned N) {
  if (!phi.isotrivial())
    throw std::invalid_argument("isotrivial_orbit_constants: map not isotrivial");
  // phi^(n+1)(gamma) = (phi^n(gamma) - gamma)^2 + c = (c_n - b)^2 + c.
  Rat b = phi.b().coeff(0);
  std::vector<Rat> cs;
  cs.reserve(N);
  Rat cn(0);  // c_1 = 0 since phi(gamma) = c
  cs.push_back(cn);
  for (unsigned i = 1; i < N; ++i) {
    Rat s = cn - b;
    cn = s * s;
    cs.push_back(cn);
  }
  return cs;
}

namespace {

// Escape test for the constant recursion s -> s^2 + a:
// |s| > (1 + sqrt(1 + 4|a|))/2 guarantees divergence. Compared exactly:
// 2|s| - 1 > 0 and (2|s| - 1)^2 > 1 + 4|a|.
bool escapes(const Rat& s, const Rat& a) {
  Rat lhs = Rat(2) * abs(s) - 1;
  if (sgn(lhs) <= 0) return false;
  return lhs * lhs > Rat(1) + Rat(4) * abs(a);
}

PcfStatus isotrivial_pcf(const QuadMap& phi, unsigned N) {
  // With b = gamma - c constant, c_n - b follows s -> s^2 + a, a = -b.
  Rat b = phi.b().coeff(0);
  Rat a = -b;
  std::vector<Rat> seen;
  Rat s = a;  // s_1 = c_1 - b = -b = a
  for (unsigned n = 1; n <= N; ++n) {
    for (unsigned j = 0; j < seen.size(); ++j) {
      if (seen[j] == s) {
        PcfStatus st;
        st.kind = PcfStatus::Kind::Finite;
        st.preperiod = j;
        st.period = static_cast<unsigned>(seen.size()) - j;
        return st;
      }
    }
    if (escapes(s, a)) {
      PcfStatus st;
      st.kind = PcfStatus::Kind::Infinite;
      st.witness_index = n;
      st.witness = "orbit escapes the radius (1+sqrt(1+4|a|))/2 at step " +
                   std::to_string(n);
      return st;
    }
    seen.push_back(s);
    s = s * s + a;
  }
  PcfStatus st;
  st.kind = PcfStatus::Kind::UndeterminedUpTo;
  st.bound = N;
  return st;
}

}  // namespace

MapClass classify(const QuadMap& phi, unsigned pcf_search_bound) {
  MapClass mc;
  mc.isotrivial = phi.isotrivial();
  if (mc.isotrivial) {
    mc.height_case = HeightCase::Isotrivial;
    mc.pcf = isotrivial_pcf(phi, pcf_search_bound);
    return mc;
  }
  mc.height_case = phi.h_gamma() != phi.h_c() ? HeightCase::UnequalHeights
                                              : HeightCase::EqualHeightsNonIso;
  // Non-isotrivial: h(phi^m(gamma)) = 2^(m-1) h(b or phi) beyond an explicit
  // threshold, hence strictly increasing and the orbit infinite.
  unsigned from = 2;
  if (mc.height_case == HeightCase::EqualHeightsNonIso) {
    while (!beyond_rho(phi, from)) ++from;
  }
  mc.pcf.kind = PcfStatus::Kind::Infinite;
  mc.pcf.witness_index = from;
  mc.pcf.witness =
      "heights of phi^m(gamma) strictly increase for m >= " + std::to_string(from);
  return mc;
}

QuadMapOverK base_change(const QuadMap& phi, const RatFunc& f) {
  if (height(f) == 0)
    throw std::invalid_argument("base_change: constant f");
  return {eval_at(phi.gamma, f), eval_at(phi.c, f)};
}

QuadFactorization factor_quadratic(const QuadMapOverK& psi) {
  QuadFactorization out;
  if (psi.c.is_zero()) {
    out.splits = true;
    out.roots = {psi.gamma, psi.gamma};
    return out;
  }
  auto root = ratfunc_sqrt(-psi.c);
  if (!root) {
    out.splits = false;
    return out;
  }
  RatFunc r1 = psi.gamma + *root;
  RatFunc r2 = psi.gamma - *root;
  if (RatFunc::compare(r2, r1) < 0) std::swap(r1, r2);
  out.splits = true;
  out.roots = {std::move(r1), std::move(r2)};
  return out;
}

}  // namespace arboreal
