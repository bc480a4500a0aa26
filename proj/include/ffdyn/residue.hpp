#pragma once

#include <memory>

#include "ffdyn/poly.hpp"

namespace ffdyn {

// F_q[Y]/(N) for a nonconstant N.
class ResidueRing {
 public:
  explicit ResidueRing(FqPoly modulus);
  const FqPoly& modulus() const { return N_; }
  const FieldPtr& field() const { return N_.field(); }

  FqPoly reduce(const FqPoly& a) const { return a.degree() < N_.degree() ? a : a % N_; }
  FqPoly mul(const FqPoly& a, const FqPoly& b) const { return reduce(a * b); }
  FqPoly pow(const FqPoly& a, std::uint64_t k) const { return powmod(a, k, N_); }
  bool is_unit(const FqPoly& a) const { return gcd(a, N_).is_one(); }
  FqPoly inv(const FqPoly& a) const { return invmod(a, N_); }

 private:
  FqPoly N_;
};

class ResidueElem {
 public:
  ResidueElem(std::shared_ptr<const ResidueRing> R, const FqPoly& v) : R_(std::move(R)), v_(R_->reduce(v)) {}
  const FqPoly& value() const { return v_; }
  const ResidueRing& ring() const { return *R_; }

  friend ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) { return {a.R_, a.v_ + b.v_}; }
  friend ResidueElem operator-(const ResidueElem& a, const ResidueElem& b) { return {a.R_, a.v_ - b.v_}; }
  friend ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) { return {a.R_, a.R_->mul(a.v_, b.v_)}; }
  ResidueElem inv() const { return {R_, R_->inv(v_)}; }
  ResidueElem pow(std::uint64_t k) const { return {R_, R_->pow(v_, k)}; }
  bool is_unit() const { return R_->is_unit(v_); }
  friend bool operator==(const ResidueElem& a, const ResidueElem& b) { return a.v_ == b.v_; }

 private:
  std::shared_ptr<const ResidueRing> R_;
  FqPoly v_;
};

}  // namespace ffdyn
