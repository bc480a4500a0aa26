#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffdyn {

// Elements of F_q are indices 0..q-1: the index of sum d_i z^i (z the
// generator over F_p) is sum d_i p^i. For q = p this is the usual residue.
using FqElem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  // q = p^e. The extension is built on the lexicographically smallest monic
  // irreducible polynomial of degree e over F_p.
  static FieldPtr make(std::uint32_t p, std::uint32_t e = 1);
  static FieldPtr make_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool is_prime() const { return e_ == 1; }
  // Coefficients of the defining polynomial over F_p, ascending, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElem add(FqElem a, FqElem b) const { return prime_ ? addp(a, b) : add_[a * q_ + b]; }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem neg(FqElem a) const { return prime_ ? (a == 0 ? 0 : p_ - a) : neg_[a]; }
  FqElem mul(FqElem a, FqElem b) const {
    return prime_ ? static_cast<FqElem>((std::uint64_t{a} * b) % p_) : mul_[a * q_ + b];
  }
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t k) const;
  FqElem from_int(long long v) const;  // image of the integer v

  // Least (by index) square root, or nullopt for non-squares.
  std::optional<FqElem> sqrt(FqElem a) const;
  bool is_square(FqElem a) const { return sqrt(a).has_value(); }
  std::uint64_t mult_order(FqElem a) const;

  std::vector<std::uint32_t> digits(FqElem a) const;
  FqElem from_digits(std::span<const std::uint32_t> d) const;

  std::string to_string(FqElem a) const;
  // Accepts a plain integer 0..p-1 or a bracketed digit list "[d0,d1,...]".
  FqElem parse(const std::string& s) const;

  // Kernels on ascending coefficient vectors; prime fields use delayed
  // reduction in 64-bit accumulators.
  void mul_full(std::span<const FqElem> a, std::span<const FqElem> b, std::vector<FqElem>& out) const;
  // Only coefficients with index >= lo of the full product, stored from lo.
  void mul_high(std::span<const FqElem> a, std::span<const FqElem> b, std::size_t lo,
                std::vector<FqElem>& out) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  Field() = default;
  FqElem addp(FqElem a, FqElem b) const {
    FqElem s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t p_ = 0, e_ = 0, q_ = 0;
  bool prime_ = true;
  std::vector<std::uint32_t> modulus_;
  std::vector<FqElem> add_, mul_, neg_, inv_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace ffdyn
