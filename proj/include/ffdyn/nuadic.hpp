#pragma once

#include <optional>

#include "ffdyn/poly.hpp"
#include "ffdyn/quad.hpp"
#include "ffdyn/rational.hpp"

namespace ffdyn {

// How the place pi splits in K(sqrt(delta)).
enum class LocalType { Split, Inert, Ramified };

struct LocalSplitting {
  LocalType type;
  int delta_valuation;  // v_pi(delta)
  FqPoly unit_part;     // delta / pi^v
};
LocalSplitting local_splitting(const FqPoly& delta, const FqPoly& pi);

// Least (by coefficient index) square root of a modulo the irreducible pi.
std::optional<FqPoly> sqrt_mod_irreducible(const FqPoly& a, const FqPoly& pi);
// Multiplicative lift of a residue a (deg a < deg pi) into F_q[Y]/(pi^n).
FqPoly teichmuller_lift(const FqPoly& a, const FqPoly& pi, int n);

// pi-adic valuation of x in the completion of K(sqrt(delta)) above pi,
// normalized so v(pi) = 1; values lie in (1/e)Z. In the split case the
// embedding sends sqrt(delta) to the Hensel lift of the least residue root.
// prec is the starting pi-adic precision of that lift (it doubles as needed).
Rational quad_val_nu(const QuadElem& x, const FqPoly& pi, int prec = 16);

}  // namespace ffdyn
