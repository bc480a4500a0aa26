#include "ffdyn/ratfunc.hpp"

#include "ffdyn/error.hpp"

namespace ffdyn {

RatFunc::RatFunc(FqPoly num) : num_(std::move(num)), den_(FqPoly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = FqPoly::constant(den_.field(), 1);
    if (!num_.field()) num_ = FqPoly(den_.field());
    return;
  }
  FqPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const FqElem li = den_.F().inv(den_.lead());
  num_ = num_.scaled(li);
  den_ = den_.scaled(li);
}

int RatFunc::v_infty() const {
  if (is_zero()) fail(ErrorKind::DomainError, "valuation of zero");
  return den_.degree() - num_.degree();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

RatFunc RatFunc::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

std::string to_string(const RatFunc& f) {
  if (f.is_poly()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

RatFunc parse_ratfunc(const FieldPtr& F, const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      auto strip = [](std::string t) {
        if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
        return t;
      };
      return RatFunc(parse_poly(F, strip(s.substr(0, i))), parse_poly(F, strip(s.substr(i + 1))));
    }
  }
  std::string t = s;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  return RatFunc(parse_poly(F, t));
}

}  // namespace ffdyn
