#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffdyn/poly.hpp"
#include "ffdyn/rational.hpp"
#include "ffdyn/ratfunc.hpp"

namespace ffdyn {

// Truncated element of K_inf = F_q((1/Y)). Coefficients of Y^k are known
// exactly for k >= floor and unknown below; c_[i] is the coefficient of
// Y^(floor + i). An empty coefficient vector means zero to the known precision.
class Laurent {
 public:
  Laurent() = default;
  Laurent(FieldPtr F, int floor, std::vector<FqElem> coeffs);

  static Laurent zero(FieldPtr F, int floor) { return Laurent(std::move(F), floor, {}); }
  static Laurent from_poly(const FqPoly& p, int floor);
  // Quotient num/den known to rel_prec digits below its leading term.
  static Laurent from_ratfunc(const RatFunc& r, int rel_prec);

  const FieldPtr& field() const { return F_; }
  int floor() const { return floor_; }
  bool is_zero_to_precision() const { return c_.empty(); }
  // Exponent of the leading term; throws PrecisionExhausted when zero.
  int top() const;
  int rel_precision() const { return c_.empty() ? 0 : static_cast<int>(c_.size()); }
  FqElem lead() const { return c_.empty() ? 0 : c_.back(); }
  // Coefficient of Y^k for k >= floor (zero above the top).
  FqElem coeff(int k) const;
  const std::vector<FqElem>& raw() const { return c_; }

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inv(); }
  Laurent inv() const;  // throws PrecisionExhausted when zero to precision
  Laurent mul_poly(const FqPoly& p) const;  // exact polynomial factor
  Laurent shifted(int k) const;             // times Y^k
  Laurent scaled(FqElem c) const;
  // this - c * Y^k * y, the row operation used by lattice reduction.
  Laurent minus_scaled_shift(FqElem c, int k, const Laurent& y) const;
  // Raise the floor (discard digits below new_floor).
  Laurent truncated_at(int new_floor) const;

 private:
  void trim();
  FieldPtr F_;
  int floor_ = 0;
  std::vector<FqElem> c_;
};

// v_inf(f) = -top. A zero-to-precision input yields +infinity (nullopt) and
// raises the precision_exhausted flag instead of throwing.
struct InftyValuation {
  std::optional<int> value;
  bool precision_exhausted = false;
};
InftyValuation val_infty(const Laurent& f);

// ([f], {f}); requires floor <= 0.
std::pair<FqPoly, Laurent> integer_fractional_split(const Laurent& f);
// {1/f} for v_inf(f) > 0. DomainError otherwise; PrecisionExhausted when the
// result would have no certified digit.
Laurent artin_map(const Laurent& f);
// Square root with prec known digits: deg D even, leading coefficient a
// square. The leading coefficient of the root is the least square root.
Laurent sqrt_laurent(const FqPoly& delta, int prec);
// True if a - b vanishes at their common precision.
bool agrees(const Laurent& a, const Laurent& b);

std::string to_string(const Laurent& f);  // "Y^t*[c_t,...,c_floor]@floor"
Laurent parse_laurent(const FieldPtr& F, const std::string& s);

}  // namespace ffdyn
