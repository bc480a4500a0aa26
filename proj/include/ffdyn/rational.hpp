#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ffdyn {

// Exact rational with 64-bit parts, reduced, positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: integers convert implicitly
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  long long floor() const;
  long long ceil() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;  // "n" or "n/d"
  static Rational parse(const std::string& s);

 private:
  long long num_ = 0, den_ = 1;
};

}  // namespace ffdyn
