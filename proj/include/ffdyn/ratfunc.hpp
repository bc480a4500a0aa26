#pragma once

#include <string>

#include "ffdyn/poly.hpp"

namespace ffdyn {

// Element of F_q(Y): num/den with gcd 1 and den monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(FqPoly num);
  RatFunc(FqPoly num, FqPoly den);  // throws DivisionByZero for den = 0

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_one(); }
  // v_inf = deg den - deg num; throws DomainError on zero.
  int v_infty() const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inv() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize();
  FqPoly num_, den_;
};

std::string to_string(const RatFunc& f);
RatFunc parse_ratfunc(const FieldPtr& F, const std::string& s);

}  // namespace ffdyn
