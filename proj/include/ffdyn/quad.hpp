#pragma once

#include <memory>
#include <string>
#include <utility>

#include "ffdyn/poly.hpp"
#include "ffdyn/rational.hpp"
#include "ffdyn/ratfunc.hpp"

namespace ffdyn {

// K(sqrt(D)) for a fixed nonsquare polynomial D.
struct QuadField {
  FqPoly delta;
  const FieldPtr& field() const { return delta.field(); }
};
using QuadFieldPtr = std::shared_ptr<const QuadField>;

// Checks that D is not a square in K and the characteristic is odd.
QuadFieldPtr make_quad_field(const FqPoly& delta);

// (a + b sqrt(D)) / c with gcd(a, b, c) = 1 and c monic.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(QuadFieldPtr K, FqPoly a, FqPoly b, FqPoly c);
  static QuadElem from_ratfunc(QuadFieldPtr K, const RatFunc& r);
  static QuadElem from_poly(QuadFieldPtr K, const FqPoly& p) { return from_ratfunc(std::move(K), RatFunc(p)); }
  static QuadElem sqrt_delta(QuadFieldPtr K);

  const QuadFieldPtr& quad_field() const { return K_; }
  const FqPoly& delta() const { return K_->delta; }
  const FqPoly& a() const { return a_; }
  const FqPoly& b() const { return b_; }
  const FqPoly& c() const { return c_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  RatFunc rational_part() const { return RatFunc(a_, c_); }

  QuadElem conj() const { return QuadElem(K_, a_, -b_, c_); }
  RatFunc norm() const;   // x * conj(x)
  RatFunc trace() const;  // x + conj(x)
  QuadElem inv() const;

  QuadElem operator-() const { return QuadElem(K_, -a_, -b_, c_); }
  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y) { return x + (-y); }
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inv(); }
  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.delta() == y.delta();
  }
  QuadElem pow(std::uint64_t k) const;

 private:
  void normalize();
  QuadFieldPtr K_;
  FqPoly a_, b_, c_;
};

std::string to_string(const QuadElem& x);  // "a,b,c,D"
QuadElem parse_quad(const FieldPtr& F, const std::string& s);

// Roots of X^2 + B X + C over K, ordered so that the normalized sqrt(D)
// coefficient of the first root has the smaller leading coefficient (the
// same least-representative rule as square roots): sqrt(D) comes before -sqrt(D).
// Throws NotIrrational for split polynomials, UnsupportedCharacteristic for p = 2.
std::pair<QuadElem, QuadElem> quad_minpoly_root(const RatFunc& B, const RatFunc& C);

}  // namespace ffdyn
