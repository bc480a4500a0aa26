#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ffdyn/laurent.hpp"
#include "ffdyn/quad.hpp"

namespace ffdyn {

// Complete quotient (P + sqrt(D)) / Q with Q | D - P^2. The square root is
// the fixed embedding sqrt(D) = W * sqrt(delta) of the surd's field.
struct SurdState {
  FqPoly P, Q;
  friend bool operator==(const SurdState& a, const SurdState& b) { return a.P == b.P && a.Q == b.Q; }
};

struct CFExpansion {
  std::vector<FqPoly> preperiod, period;
  // Complete quotients realizing the first period (same length as period).
  std::vector<SurdState> period_states;
  // Smallest m | period.size() with x_{i+m} = twist * x_i on the period:
  // partial quotients then repeat up to alternating unit scaling.
  std::size_t twisted_length = 0;
  FqElem twist = 1;
};

// Exact expansion of a real quadratic irrational. NotIrrational for rational
// input, NotRealQuadratic if sqrt(delta) does not embed in K_inf,
// PeriodNotFound if no state repeats within max_steps.
CFExpansion cf_expand_surd(const QuadElem& f, std::size_t max_steps = 100000);

// Partial quotients of a truncated Laurent element, as many as precision
// certifies (at most max_terms).
std::vector<FqPoly> cf_expand_laurent(const Laurent& f, std::size_t max_terms);

// Laurent image of (a + b sqrt(delta))/c with rel_prec digits of sqrt(delta).
Laurent embed(const QuadElem& x, int rel_prec);

// n-th convergent p_n/q_n of a partial quotient list.
struct Convergent {
  FqPoly p, q;
};
std::vector<Convergent> convergents(const std::vector<FqPoly>& quotients);

// Sum of degrees of the partial quotients of the primitive (twisted) period.
int primitive_period_degree(const CFExpansion& cf);

// JSON text {"preperiod":[...],"period":[...]}.
std::string cf_to_json(const CFExpansion& cf);

}  // namespace ffdyn
