#include "ffdyn/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "ffdyn/error.hpp"

namespace ffdyn {

FqPoly::FqPoly(FieldPtr F, std::vector<FqElem> coeffs) : F_(std::move(F)), c_(std::move(coeffs)) { trim(); }

FqPoly FqPoly::constant(FieldPtr F, FqElem c) { return FqPoly(std::move(F), std::vector<FqElem>{c}); }

FqPoly FqPoly::monomial(FieldPtr F, FqElem c, int k) {
  if (c == 0) return FqPoly(std::move(F));
  std::vector<FqElem> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return FqPoly(std::move(F), std::move(v));
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  if (!F_) F_ = o.F_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  if (!F_) F_ = o.F_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  FqPoly r(a.F_ ? a.F_ : b.F_);
  if (a.c_.empty() || b.c_.empty()) return r;
  r.F_->mul_full(a.c_, b.c_, r.c_);
  r.trim();
  return r;
}

FqPoly FqPoly::scaled(FqElem c) const {
  if (c == 0) return FqPoly(F_);
  FqPoly r = *this;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

FqPoly FqPoly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  FqPoly r(F_);
  r.c_.assign(static_cast<std::size_t>(k), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

FqPoly FqPoly::truncated(int n) const {
  if (n <= 0) return FqPoly(F_);
  if (c_.size() <= static_cast<std::size_t>(n)) return *this;
  return FqPoly(F_, std::vector<FqElem>(c_.begin(), c_.begin() + n));
}

FqPoly FqPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(F_->inv(lead()));
}

FqElem FqPoly::eval(FqElem x) const {
  FqElem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

FqPoly FqPoly::derivative() const {
  if (c_.size() <= 1) return FqPoly(F_);
  std::vector<FqElem> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = F_->mul(c_[i], F_->from_int(static_cast<long long>(i)));
  return FqPoly(F_, std::move(d));
}

std::size_t FqPoly::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : c_) h = (h ^ x) * 1099511628211ull;
  return h ^ c_.size();
}

std::pair<FqPoly, FqPoly> divrem(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldPtr& Fp = b.field();
  const Field& F = *Fp;
  if (a.degree() < b.degree()) return {FqPoly(Fp), a};
  std::vector<FqElem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<FqElem> quo(r.size() - db, 0);
  const FqElem inv_lead = F.inv(b.lead());
  for (std::size_t k = r.size() - 1;; --k) {
    const FqElem c = F.mul(r[k], inv_lead);
    quo[k - db] = c;
    if (c != 0) {
      const FqElem nc = F.neg(c);
      for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = F.add(r[k - db + i], F.mul(nc, bc[i]));
    }
    if (k == db) break;
  }
  r.resize(db);
  return {FqPoly(Fp, std::move(quo)), FqPoly(Fp, std::move(r))};
}

FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divrem(a, b).first; }
FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divrem(a, b).second; }

bool divides(const FqPoly& d, const FqPoly& a) { return (a % d).is_zero(); }

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const FqPoly& a, const FqPoly& b) {
  const FieldPtr& F = a.field() ? a.field() : b.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::constant(F, 1), s1(F), t0(F), t1 = FqPoly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [qt, r2] = divrem(r0, r1);
    FqPoly s2 = s0 - qt * s1, t2 = t0 - qt * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FqElem li = F->inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return (a * b) % m; }

FqPoly powmod(const FqPoly& a, std::uint64_t k, const FqPoly& m) {
  FqPoly result = FqPoly::constant(m.field(), 1) % m, base = a % m;
  while (k > 0) {
    if (k & 1) result = mulmod(result, base, m);
    k >>= 1;
    if (k) base = mulmod(base, base, m);
  }
  return result;
}

FqPoly pow(const FqPoly& a, unsigned k) {
  FqPoly result = FqPoly::constant(a.field(), 1), base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

FqPoly invmod(const FqPoly& a, const FqPoly& m) {
  XGcd x = xgcd(a % m, m);
  if (!x.g.is_one()) fail(ErrorKind::DivisionByZero, "element is not invertible modulo " + to_string(m));
  return x.s % m;
}

int valuation(const FqPoly& a, const FqPoly& d) {
  if (a.is_zero()) fail(ErrorKind::DomainError, "valuation of zero");
  if (d.degree() < 1) fail(ErrorKind::InvalidDegree, "valuation needs a nonconstant divisor");
  int v = 0;
  FqPoly x = a;
  while (true) {
    auto [qt, r] = divrem(x, d);
    if (!r.is_zero()) return v;
    x = std::move(qt);
    ++v;
  }
}

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n < 1) fail(ErrorKind::InvalidDegree, "irreducibility of a constant");
  if (n == 1) return true;
  // Rabin: Y^(q^n) = Y mod f and gcd(Y^(q^(n/s)) - Y, f) = 1 for prime s | n.
  const FieldPtr& F = f.field();
  const std::uint64_t q = F->q();
  const FqPoly Yp = FqPoly::Y(F);
  std::vector<FqPoly> frob(static_cast<std::size_t>(n) + 1);
  frob[0] = Yp % f;
  for (int i = 1; i <= n; ++i) frob[static_cast<std::size_t>(i)] = powmod(frob[static_cast<std::size_t>(i) - 1], q, f);
  if (!(frob[static_cast<std::size_t>(n)] - Yp % f).is_zero()) return false;
  int m = n;
  for (int s = 2; s <= m; ++s) {
    if (m % s != 0) continue;
    while (m % s == 0) m /= s;
    const FqPoly g = gcd(frob[static_cast<std::size_t>(n / s)] - Yp, f);
    if (!g.is_one()) return false;
  }
  return true;
}

FqPoly poly_from_index(const FieldPtr& F, std::uint64_t idx, int n) {
  std::vector<FqElem> c(static_cast<std::size_t>(std::max(n, 0)));
  for (auto& x : c) {
    x = static_cast<FqElem>(idx % F->q());
    idx /= F->q();
  }
  return FqPoly(F, std::move(c));
}

std::vector<FqPoly> monic_irreducibles(const FieldPtr& F, int degree) {
  std::vector<FqPoly> out;
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= F->q();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    FqPoly f = poly_from_index(F, idx, degree) + FqPoly::monomial(F, 1, degree);
    if (is_irreducible(f)) out.push_back(f);
  }
  return out;
}

// Exact square root in F_q[Y] by matching coefficients from the top.
std::optional<FqPoly> sqrt_exact(const FqPoly& f) {
  const FieldPtr& Fp = f.field();
  if (f.is_zero()) return f;
  const int n = f.degree();
  if (n % 2 != 0) return std::nullopt;
  const Field& F = *Fp;
  auto lc = F.sqrt(f.lead());
  if (!lc) return std::nullopt;
  const int m = n / 2;
  std::vector<FqElem> s(static_cast<std::size_t>(m) + 1, 0);
  s[static_cast<std::size_t>(m)] = *lc;
  const FqElem inv2s = F.inv(F.mul(F.from_int(2), *lc));
  for (int k = m - 1; k >= 0; --k) {
    // Coefficient of Y^(m+k) in s^2 is 2 s_m s_k + sum_{i+j=m+k, k<i,j<m} s_i s_j.
    FqElem acc = f.coeff(m + k);
    for (int i = k + 1; i < m; ++i) {
      const int j = m + k - i;
      if (j <= k || j >= m) continue;
      acc = F.sub(acc, F.mul(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]));
    }
    s[static_cast<std::size_t>(k)] = F.mul(acc, inv2s);
  }
  FqPoly r(Fp, s);
  if (!(r * r == f)) return std::nullopt;
  return r;
}

std::string to_string(const FqPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  const Field& F = f.F();
  for (int k = f.degree(); k >= 0; --k) {
    const FqElem c = f.coeff(k);
    if (c == 0) continue;
    if (!s.empty()) s += '+';
    if (k == 0) {
      s += F.to_string(c);
      continue;
    }
    if (c != 1) s += F.to_string(c) + "*";
    s += k == 1 ? std::string("Y") : "Y^" + std::to_string(k);
  }
  return s;
}

FqPoly parse_poly(const FieldPtr& F, const std::string& input) {
  std::string s;
  for (char ch : input)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) fail(ErrorKind::ParseError, "empty polynomial");
  FqPoly result(F);
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      fail(ErrorKind::ParseError, "expected '+' in '" + input + "'");
    }
    first = false;
    std::size_t j = i;
    int depth = 0;
    while (j < s.size() && (depth > 0 || (s[j] != '+' && s[j] != '-'))) {
      if (s[j] == '[') ++depth;
      if (s[j] == ']') --depth;
      ++j;
    }
    const std::string term = s.substr(i, j - i);
    if (term.empty()) fail(ErrorKind::ParseError, "empty term in '" + input + "'");
    i = j;
    FqElem c = 1;
    int k = 0;
    const std::size_t ypos = term.find('Y');
    if (ypos == std::string::npos) {
      c = F->parse(term);
    } else {
      std::string coef = term.substr(0, ypos);
      if (!coef.empty()) {
        if (coef.back() != '*') fail(ErrorKind::ParseError, "expected '*' before Y in '" + term + "'");
        coef.pop_back();
        c = F->parse(coef);
      }
      const std::string rest = term.substr(ypos + 1);
      if (rest.empty()) {
        k = 1;
      } else {
        if (rest[0] != '^' || rest.size() < 2 ||
            !std::all_of(rest.begin() + 1, rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
            rest.size() > 7)
          fail(ErrorKind::ParseError, "bad exponent in '" + term + "'");
        k = std::stoi(rest.substr(1));
      }
    }
    FqPoly t = FqPoly::monomial(F, c, k);
    if (negative) result -= t;
    else result += t;
  }
  return result;
}

}  // namespace ffdyn
