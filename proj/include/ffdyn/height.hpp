#pragma once

#include <optional>
#include <vector>

#include "ffdyn/laurent.hpp"
#include "ffdyn/mat2.hpp"
#include "ffdyn/pgl2.hpp"

namespace ffdyn {

using LaurentMat = Mat2<Laurent>;

// Digits kept below every leading term that reduction relies on.
inline constexpr int kHeightGuard = 8;

// g in Gamma_inf diag(Y^-m1, Y^-m2) G(O_inf) with m1 <= m2; the height is m2 - m1.
struct SplittingType {
  int m1 = 0, m2 = 0;
  int height() const { return m2 - m1; }
};

// Row-reduced form gamma * g of a Laurent matrix: the leading coefficient
// vectors of the two rows are independent and row 0 has the larger degree.
struct ReducedForm {
  LaurentMat rows;
  PolyMat gamma;  // accumulated row operations, exact
  int deg0 = 0, deg1 = 0;
};

// Throws PrecisionExhausted if a leading vector is not certified with the guard band.
ReducedForm reduce_rows(const LaurentMat& g, bool track_gamma = true);
SplittingType splitting_type(const LaurentMat& g);
int height_infty(const LaurentMat& g);

LaurentMat laurent_from_poly(const PolyMat& m, int floor);
// Laurent image of A * [[f+, f-], [1, 1]] with rel_prec digits per entry.
LaurentMat embed_point(const PolyMat& A, const QuadMat& g, int rel_prec);

// Walks the A-orbit x a^i (a = diag(1, 1/Y)) of the point x = Gamma_inf g,
// keeping a reduced form so each step costs a few row operations.
class GeodesicWalker {
 public:
  GeodesicWalker(const LaurentMat& g, bool track_gamma);
  int height() const { return rf_.deg0 - rf_.deg1; }
  const ReducedForm& form() const { return rf_; }
  void step();

 private:
  ReducedForm rf_;
  bool track_;
};

// Heights along i = 0..steps-1.
std::vector<int> walk_heights(const LaurentMat& g, int steps);

// Consecutive heights differ by exactly one, and no local minimum lies above 0.
bool is_full_down(const std::vector<int>& cyclic_heights);

}  // namespace ffdyn
