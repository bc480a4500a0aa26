#pragma once

#include <random>

#include "ffdyn/field.hpp"
#include "ffdyn/poly.hpp"

namespace ffdyn::testing {

inline FqPoly P(const FieldPtr& F, const char* s) { return parse_poly(F, s); }

inline FqPoly random_poly(std::mt19937_64& rng, const FieldPtr& F, int max_deg) {
  std::vector<FqElem> c(static_cast<std::size_t>(max_deg + 1));
  for (auto& x : c) x = static_cast<FqElem>(rng() % F->q());
  return FqPoly(F, c);
}

inline FqPoly random_nonzero(std::mt19937_64& rng, const FieldPtr& F, int max_deg) {
  for (;;) {
    FqPoly f = random_poly(rng, F, max_deg);
    if (!f.is_zero()) return f;
  }
}

inline FqPoly random_monic(std::mt19937_64& rng, const FieldPtr& F, int deg) {
  FqPoly f = random_poly(rng, F, deg - 1) + FqPoly::monomial(F, 1, deg);
  return f;
}

}  // namespace ffdyn::testing
