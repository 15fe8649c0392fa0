#ifndef ARBOREAL_DYNAMICS_HPP
#define ARBOREAL_DYNAMICS_HPP

#include <algorithm>
#include <optional>
#include <string>

#include "arboreal/bipoly.hpp"
#include "arboreal/ratfunc.hpp"

namespace arboreal {

// phi(x) = (x - gamma)^2 + c with gamma, c in Q[t].
struct QuadMap {
  Poly gamma;
  Poly c;

  long h_gamma() const { return height(gamma); }
  long h_c() const { return height(c); }
  // h(phi) = max(h(gamma), h(c)).
  long h() const { return std::max(h_gamma(), h_c()); }
  // b = gamma - c; h(b) = 0 detects isotriviality.
  Poly b() const { return gamma - c; }
  bool isotrivial() const { return height(b()) == 0; }

  Poly apply(const Poly& x) const;
  RatFunc apply(const RatFunc& x) const;
  BiPoly as_bipoly() const;
  // phi^n as an element of (Q[t])[x]; n >= 1.
  BiPoly iterate_bipoly(unsigned n) const;
};

// Same shape over K = Q(t); supports only what base change needs.
struct QuadMapOverK {
  RatFunc gamma;
  RatFunc c;

  RatFunc apply(const RatFunc& x) const;
  bool is_polynomial() const { return gamma.is_poly() && c.is_poly(); }
};

// phi^n(x0); n = 0 returns x0.
Poly iterate_at(const QuadMap& phi, const Poly& x0, unsigned n);
RatFunc iterate_at(const QuadMap& phi, const RatFunc& x0, unsigned n);
RatFunc iterate_at(const QuadMapOverK& phi, const RatFunc& x0, unsigned n);

// [phi(gamma), ..., phi^N(gamma)].
std::vector<Poly> critical_orbit(const QuadMap& phi, unsigned N);
// [phi(0), ..., phi^N(0)].
std::vector<Poly> zero_orbit(const QuadMap& phi, unsigned N);

enum class PredictionKind { Exact, UpperBound };
struct HeightPrediction {
  PredictionKind kind;
  long value;
};

// Height of phi^m(gamma) / phi^m(0) from the closed-form case analysis.
// Exact predictions match direct computation; upper bounds dominate it.
HeightPrediction predict_height_critical(const QuadMap& phi, unsigned m);
HeightPrediction predict_height_zero(const QuadMap& phi, unsigned m);

// The threshold parameter rho = log2(h(gamma)/h(gamma-c)) + 1 used by the
// equal-heights case. The double is informational only: every comparison
// m > rho is done exactly as 2^(m-1)*h(b) vs h(gamma).
struct RhoInfo {
  long h_gamma;
  long h_b;
  double log2_value;
};
RhoInfo rho(const QuadMap& phi);
// Exact test for m > rho without floating point.
bool beyond_rho(const QuadMap& phi, unsigned m);

enum class HeightCase { UnequalHeights, EqualHeightsNonIso, Isotrivial };

struct PcfStatus {
  enum class Kind { Finite, Infinite, UndeterminedUpTo };
  Kind kind;
  // Finite: preperiod + period of the constant orbit.
  unsigned preperiod = 0;
  unsigned period = 0;
  // Infinite: index from which the certificate applies.
  unsigned witness_index = 0;
  std::string witness;
  // UndeterminedUpTo: the search bound.
  unsigned bound = 0;
};

struct MapClass {
  bool isotrivial;
  HeightCase height_case;
  PcfStatus pcf;
};

// Isotriviality via h(gamma - c) = 0; post-critical finiteness decided
// exactly. Non-isotrivial maps are always post-critically infinite (heights
// of phi^m(gamma) eventually strictly increase); isotrivial maps reduce to
// the constant recursion s -> s^2 + a with a = c - gamma, settled by cycle
// detection or the escape radius (1 + sqrt(1 + 4|a|))/2, compared exactly.
MapClass classify(const QuadMap& phi, unsigned pcf_search_bound);

// Orbit constants c_n with phi^n(gamma) = c + c_n; requires isotriviality.
std::vector<Rat> isotrivial_orbit_constants(const QuadMap& phi, unsigned N);

// phi_f(x) = (x - gamma(f))^2 + c(f); f must be nonconstant.
QuadMapOverK base_change(const QuadMap& phi, const RatFunc& f);

// psi splits over K iff -c is a square in K; roots gamma +- sqrt(-c),
// ordered canonically.
struct QuadFactorization {
  bool splits;
  std::optional<std::pair<RatFunc, RatFunc>> roots;
};
QuadFactorization factor_quadratic(const QuadMapOverK& psi);

}  // namespace arboreal

#endif
