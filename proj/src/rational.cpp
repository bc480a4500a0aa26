#include "ffdyn/rational.hpp"

#include <numeric>

#include "ffdyn/error.hpp"

namespace ffdyn {

Rational::Rational(long long n, long long d) {
  if (d == 0) fail(ErrorKind::DivisionByZero, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  num_ = g ? n / g : 0;
  den_ = g ? d / g : 1;
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

long long Rational::ceil() const { return -Rational(-num_, den_).floor(); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) fail(ErrorKind::DivisionByZero, "rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  try {
    const auto slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(n);
    }
    const std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    long long n = std::stoll(ns, &used);
    if (used != ns.size()) throw std::invalid_argument(s);
    long long d = std::stoll(ds, &used);
    if (used != ds.size()) throw std::invalid_argument(s);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "bad rational '" + s + "'");
  }
}

}  // namespace ffdyn
