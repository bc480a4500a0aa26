#include "ffdyn/quad.hpp"

#include <utility>
#include <optional>
#include <sstream>
#include <vector>

#include "ffdyn/error.hpp"

namespace ffdyn {


QuadFieldPtr make_quad_field(const FqPoly& delta) {
  if (delta.F().p() == 2) fail(ErrorKind::UnsupportedCharacteristic, "quadratic extensions need odd characteristic");
  if (delta.is_zero() || sqrt_exact(delta)) fail(ErrorKind::NotIrrational, to_string(delta) + " is a square in K");
  return std::make_shared<const QuadField>(QuadField{delta});
}

QuadElem::QuadElem(QuadFieldPtr K, FqPoly a, FqPoly b, FqPoly c)
    : K_(std::move(K)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  normalize();
}

void QuadElem::normalize() {
  const FieldPtr& F = K_->field();
  if (!a_.field()) a_ = FqPoly(F);
  if (!b_.field()) b_ = FqPoly(F);
  if (c_.is_zero()) fail(ErrorKind::DivisionByZero, "quadratic element with zero denominator");
  if (a_.is_zero() && b_.is_zero()) {
    c_ = FqPoly::constant(F, 1);
    return;
  }
  const FqPoly g = gcd(gcd(a_, b_), c_);
  if (!g.is_one()) {
    a_ = a_ / g;
    b_ = b_ / g;
    c_ = c_ / g;
  }
  const FqElem li = F->inv(c_.lead());
  if (li != 1) {
    a_ = a_.scaled(li);
    b_ = b_.scaled(li);
    c_ = c_.scaled(li);
  }
}

QuadElem QuadElem::from_ratfunc(QuadFieldPtr K, const RatFunc& r) {
  const FieldPtr& F = K->field();
  return QuadElem(K, r.num(), FqPoly(F), r.den());
}

QuadElem QuadElem::sqrt_delta(QuadFieldPtr K) {
  const FieldPtr& F = K->field();
  return QuadElem(K, FqPoly(F), FqPoly::constant(F, 1), FqPoly::constant(F, 1));
}

RatFunc QuadElem::norm() const { return RatFunc(a_ * a_ - b_ * b_ * delta(), c_ * c_); }

RatFunc QuadElem::trace() const { return RatFunc(a_.scaled(a_.F().from_int(2)), c_); }

QuadElem QuadElem::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in K(sqrt D)");
  const FqPoly n = a_ * a_ - b_ * b_ * delta();
  return QuadElem(K_, c_ * a_, -(c_ * b_), n);
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  if (x.c_ == y.c_) return QuadElem(x.K_, x.a_ + y.a_, x.b_ + y.b_, x.c_);
  return QuadElem(x.K_, x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_);
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  return QuadElem(x.K_, x.a_ * y.a_ + x.b_ * y.b_ * x.delta(), x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_);
}

QuadElem QuadElem::pow(std::uint64_t k) const {
  QuadElem result = from_poly(K_, FqPoly::constant(K_->field(), 1)), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string to_string(const QuadElem& x) {
  return to_string(x.a()) + "," + to_string(x.b()) + "," + to_string(x.c()) + "," + to_string(x.delta());
}

QuadElem parse_quad(const FieldPtr& F, const std::string& s) {
  std::vector<std::string> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) parts.push_back(tok);
  // Digit vectors contain commas; re-join pieces split inside brackets.
  std::vector<std::string> fields;
  for (auto& p : parts) {
    if (!fields.empty()) {
      const std::string& last = fields.back();
      int depth = 0;
      for (char ch : last) depth += (ch == '[') - (ch == ']');
      if (depth > 0) {
        fields.back() += "," + p;
        continue;
      }
    }
    fields.push_back(p);
  }
  if (fields.size() != 4) fail(ErrorKind::ParseError, "quadratic element needs 'a,b,c,D', got '" + s + "'");
  auto K = make_quad_field(parse_poly(F, fields[3]));
  return QuadElem(K, parse_poly(F, fields[0]), parse_poly(F, fields[1]), parse_poly(F, fields[2]));
}

std::pair<QuadElem, QuadElem> quad_minpoly_root(const RatFunc& B, const RatFunc& C) {
  const FieldPtr& F = B.field() ? B.field() : C.field();
  if (F->p() == 2) fail(ErrorKind::UnsupportedCharacteristic, "quadratic formula needs odd characteristic");
  const RatFunc four(FqPoly::constant(F, F->from_int(4)));
  const RatFunc disc = B * B - four * C;
  if (disc.is_zero()) fail(ErrorKind::NotIrrational, "repeated root");
  // sqrt(N/M) = sqrt(N)/s when M = s^2, else sqrt(N M)/M.
  FqPoly D, root_den;
  if (auto s = sqrt_exact(disc.den())) {
    D = disc.num();
    root_den = *s;
  } else {
    D = disc.num() * disc.den();
    root_den = disc.den();
  }
  auto K = make_quad_field(D);
  // (-B + sqrt(D)/root_den) / 2 with -B = u/w.
  const RatFunc mB = -B;
  const FqPoly& u = mB.num();
  const FqPoly& w = mB.den();
  const FqPoly two = FqPoly::constant(F, F->from_int(2));
  QuadElem r1(K, u * root_den, w, two * w * root_den);
  QuadElem r2(K, u * root_den, -w, two * w * root_den);
  if (r1.b().lead() > r2.b().lead()) std::swap(r1, r2);
  return {r1, r2};
}

}  // namespace ffdyn
