#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffdyn/field.hpp"

namespace ffdyn {

// Degree of the zero polynomial. Sums of two sentinels stay representable.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min() / 4;

// Element of F_q[Y], coefficients ascending and trimmed.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(FieldPtr F) : F_(std::move(F)) {}
  FqPoly(FieldPtr F, std::vector<FqElem> coeffs);

  static FqPoly constant(FieldPtr F, FqElem c);
  static FqPoly monomial(FieldPtr F, FqElem c, int k);
  static FqPoly Y(FieldPtr F) { return monomial(std::move(F), 1, 1); }

  const FieldPtr& field() const { return F_; }
  const Field& F() const { return *F_; }
  int degree() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  FqElem lead() const { return c_.empty() ? 0 : c_.back(); }
  FqElem coeff(int i) const {
    return (i >= 0 && static_cast<std::size_t>(i) < c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<FqElem>& coeffs() const { return c_; }

  FqPoly operator-() const;
  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  FqPoly& operator*=(const FqPoly& o) { return *this = *this * o; }
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  FqPoly scaled(FqElem c) const;
  FqPoly shifted(int k) const;  // times Y^k, k >= 0
  FqPoly truncated(int n) const;  // remainder mod Y^n

  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

  FqPoly monic() const;
  FqElem eval(FqElem x) const;
  FqPoly derivative() const;
  std::size_t hash() const;

 private:
  void trim();
  FieldPtr F_;
  std::vector<FqElem> c_;
};

// Throws DivisionByZero for a zero divisor.
std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b);
FqPoly operator/(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);
bool divides(const FqPoly& d, const FqPoly& a);

// Monic gcd; gcd(0,0) = 0.
FqPoly gcd(const FqPoly& a, const FqPoly& b);
struct XGcd {
  FqPoly g, s, t;  // g = s a + t b, g monic
};
XGcd xgcd(const FqPoly& a, const FqPoly& b);

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const FqPoly& a, std::uint64_t k, const FqPoly& m);
FqPoly pow(const FqPoly& a, unsigned k);
// Inverse modulo m; throws DivisionByZero if not coprime.
FqPoly invmod(const FqPoly& a, const FqPoly& m);

// Largest k with d^k | a, for a != 0 and deg d >= 1.
int valuation(const FqPoly& a, const FqPoly& d);

// Throws InvalidDegree on constants.
bool is_irreducible(const FqPoly& f);
// Monic irreducibles of the given degree in enumeration order.
std::vector<FqPoly> monic_irreducibles(const FieldPtr& F, int degree);
// All polynomials of degree < n, enumerated by coefficient index.
FqPoly poly_from_index(const FieldPtr& F, std::uint64_t idx, int n);

// Exact square root in F_q[Y] (odd characteristic), if one exists.
std::optional<FqPoly> sqrt_exact(const FqPoly& f);

std::string to_string(const FqPoly& f);
FqPoly parse_poly(const FieldPtr& F, const std::string& s);

struct FqPolyHash {
  std::size_t operator()(const FqPoly& f) const { return f.hash(); }
};

}  // namespace ffdyn
