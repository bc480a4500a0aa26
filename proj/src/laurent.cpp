#include "ffdyn/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "ffdyn/error.hpp"

namespace ffdyn {

Laurent::Laurent(FieldPtr F, int floor, std::vector<FqElem> coeffs) : F_(std::move(F)), floor_(floor), c_(std::move(coeffs)) {
  trim();
}

void Laurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Laurent Laurent::from_poly(const FqPoly& p, int floor) {
  std::vector<FqElem> c;
  const int d = p.degree();
  if (d >= floor) {
    c.reserve(static_cast<std::size_t>(d - floor + 1));
    for (int k = floor; k <= d; ++k) c.push_back(p.coeff(k));
  }
  return Laurent(p.field(), floor, std::move(c));
}

Laurent Laurent::from_ratfunc(const RatFunc& r, int rel_prec) {
  if (r.is_zero()) return zero(r.field(), -rel_prec);
  const int dd = r.den().degree();
  const Laurent den = from_poly(r.den(), dd - rel_prec + 1);
  return den.inv().mul_poly(r.num());
}

int Laurent::top() const {
  if (c_.empty()) fail(ErrorKind::PrecisionExhausted, "Laurent element is zero to known precision");
  return floor_ + static_cast<int>(c_.size()) - 1;
}

FqElem Laurent::coeff(int k) const {
  if (k < floor_) fail(ErrorKind::PrecisionExhausted, "coefficient below the precision floor");
  const long idx = static_cast<long>(k) - floor_;
  return idx < static_cast<long>(c_.size()) ? c_[static_cast<std::size_t>(idx)] : 0;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  const FieldPtr& F = a.F_ ? a.F_ : b.F_;
  const int fl = std::max(a.floor_, b.floor_);
  const int ta = a.floor_ + static_cast<int>(a.c_.size()) - 1;
  const int tb = b.floor_ + static_cast<int>(b.c_.size()) - 1;
  const int t = std::max(ta, tb);
  if (t < fl) return Laurent::zero(F, fl);
  std::vector<FqElem> c(static_cast<std::size_t>(t - fl + 1), 0);
  for (int k = fl; k <= t; ++k) {
    FqElem x = (k <= ta) ? a.c_[static_cast<std::size_t>(k - a.floor_)] : 0;
    FqElem y = (k <= tb) ? b.c_[static_cast<std::size_t>(k - b.floor_)] : 0;
    c[static_cast<std::size_t>(k - fl)] = F->add(x, y);
  }
  return Laurent(F, fl, std::move(c));
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  const FieldPtr& F = a.F_ ? a.F_ : b.F_;
  if (a.c_.empty() && b.c_.empty()) return Laurent::zero(F, a.floor_ + b.floor_ - 1);
  if (a.c_.empty()) return Laurent::zero(F, a.floor_ + b.top());
  if (b.c_.empty()) return Laurent::zero(F, b.floor_ + a.top());
  const int t = a.top() + b.top();
  const int rel = std::min(a.rel_precision(), b.rel_precision());
  const int fl = t - rel + 1;
  std::vector<FqElem> c;
  F->mul_high(a.c_, b.c_, static_cast<std::size_t>(fl - a.floor_ - b.floor_), c);
  return Laurent(F, fl, std::move(c));
}

Laurent Laurent::inv() const {
  if (c_.empty()) fail(ErrorKind::PrecisionExhausted, "inverse of an element that is zero to precision");
  const Field& F = *F_;
  const int t = top();
  const std::size_t R = c_.size();
  // u_i = coefficient of Y^(t-i) divided by the leading coefficient.
  const FqElem li = F.inv(lead());
  std::vector<FqElem> u(R), v(R, 0);
  for (std::size_t i = 0; i < R; ++i) u[i] = F.mul(c_[R - 1 - i], li);
  v[0] = 1;
  for (std::size_t k = 1; k < R; ++k) {
    FqElem acc = 0;
    for (std::size_t i = 1; i <= k; ++i)
      if (u[i]) acc = F.add(acc, F.mul(u[i], v[k - i]));
    v[k] = F.neg(acc);
  }
  std::vector<FqElem> c(R);
  for (std::size_t i = 0; i < R; ++i) c[R - 1 - i] = F.mul(v[i], li);
  return Laurent(F_, -t - static_cast<int>(R) + 1, std::move(c));
}

Laurent Laurent::mul_poly(const FqPoly& p) const {
  if (p.is_zero()) return zero(F_, floor_);
  const int fl = floor_ + p.degree();
  if (c_.empty()) return zero(F_, fl);
  std::vector<FqElem> c;
  // Product index i+j <-> exponent floor_ + i + j; keep exponents >= fl.
  F_->mul_high(c_, p.coeffs(), static_cast<std::size_t>(p.degree()), c);
  return Laurent(F_, fl, std::move(c));
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  r.floor_ += k;
  return r;
}

Laurent Laurent::scaled(FqElem c) const {
  if (c == 0) return zero(F_, floor_);
  Laurent r = *this;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

Laurent Laurent::minus_scaled_shift(FqElem c, int k, const Laurent& y) const {
  const Field& F = *F_;
  const int yfl = y.floor_ + k;
  const int fl = std::max(floor_, yfl);
  const int tx = floor_ + static_cast<int>(c_.size()) - 1;
  const int ty = yfl + static_cast<int>(y.c_.size()) - 1;
  const int t = std::max(tx, ty);
  if (t < fl) return zero(F_, fl);
  std::vector<FqElem> out(static_cast<std::size_t>(t - fl + 1), 0);
  for (int e = fl; e <= tx; ++e) out[static_cast<std::size_t>(e - fl)] = c_[static_cast<std::size_t>(e - floor_)];
  const FqElem nc = F.neg(c);
  for (int e = fl; e <= ty; ++e) {
    FqElem& o = out[static_cast<std::size_t>(e - fl)];
    o = F.add(o, F.mul(nc, y.c_[static_cast<std::size_t>(e - yfl)]));
  }
  return Laurent(F_, fl, std::move(out));
}

Laurent Laurent::truncated_at(int new_floor) const {
  if (new_floor <= floor_) return *this;
  const int t = floor_ + static_cast<int>(c_.size()) - 1;
  if (t < new_floor) return zero(F_, new_floor);
  return Laurent(F_, new_floor, std::vector<FqElem>(c_.begin() + (new_floor - floor_), c_.end()));
}

InftyValuation val_infty(const Laurent& f) {
  if (f.is_zero_to_precision()) return {std::nullopt, true};
  return {-f.top(), false};
}

std::pair<FqPoly, Laurent> integer_fractional_split(const Laurent& f) {
  if (f.floor() > 0)
    fail(ErrorKind::PrecisionExhausted, "polynomial part needs the floor at or below 0, got " + std::to_string(f.floor()));
  std::vector<FqElem> ip, fp;
  const auto& c = f.raw();
  const int fl = f.floor();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int e = fl + static_cast<int>(i);
    if (e >= 0) {
      if (ip.size() < static_cast<std::size_t>(e) + 1) ip.resize(static_cast<std::size_t>(e) + 1, 0);
      ip[static_cast<std::size_t>(e)] = c[i];
    } else {
      fp.push_back(c[i]);
    }
  }
  return {FqPoly(f.field(), std::move(ip)), Laurent(f.field(), fl, std::move(fp))};
}

Laurent artin_map(const Laurent& f) {
  if (f.is_zero_to_precision()) fail(ErrorKind::PrecisionExhausted, "Artin map of an element that is zero to precision");
  if (f.top() >= 0) fail(ErrorKind::DomainError, "Artin map needs v_inf(f) > 0");
  const Laurent g = f.inv();
  if (g.floor() > 0) fail(ErrorKind::PrecisionExhausted, "Artin map: no certified fractional digit left");
  return integer_fractional_split(g).second;
}

Laurent sqrt_laurent(const FqPoly& delta, int prec) {
  const FieldPtr& Fp = delta.field();
  const Field& F = *Fp;
  if (F.p() == 2) fail(ErrorKind::UnsupportedCharacteristic, "square roots need odd characteristic");
  if (delta.is_zero() || delta.degree() % 2 != 0) fail(ErrorKind::NoEmbedding, "degree of " + to_string(delta) + " is odd");
  auto lc = F.sqrt(delta.lead());
  if (!lc) fail(ErrorKind::NoEmbedding, "leading coefficient of " + to_string(delta) + " is not a square");
  if (prec < 1) prec = 1;
  const int m = delta.degree() / 2;
  // s_j = coefficient of Y^(m-j). Matching Y^(2m-k) in s^2 gives
  // 2 s_0 s_k + sum_{0<i<k} s_i s_(k-i) = delta_(2m-k).
  std::vector<FqElem> s(static_cast<std::size_t>(prec), 0);
  s[0] = *lc;
  const FqElem inv2s = F.inv(F.mul(F.from_int(2), *lc));
  for (int k = 1; k < prec; ++k) {
    FqElem acc = (2 * m - k >= 0) ? delta.coeff(2 * m - k) : 0;
    for (int i = 1; i < k; ++i) {
      const FqElem a = s[static_cast<std::size_t>(i)], b = s[static_cast<std::size_t>(k - i)];
      if (a && b) acc = F.sub(acc, F.mul(a, b));
    }
    s[static_cast<std::size_t>(k)] = F.mul(acc, inv2s);
  }
  std::vector<FqElem> c(static_cast<std::size_t>(prec));
  for (int j = 0; j < prec; ++j) c[static_cast<std::size_t>(prec - 1 - j)] = s[static_cast<std::size_t>(j)];
  return Laurent(Fp, m - prec + 1, std::move(c));
}

bool agrees(const Laurent& a, const Laurent& b) { return (a - b).is_zero_to_precision(); }

std::string to_string(const Laurent& f) {
  if (f.is_zero_to_precision()) return "0@" + std::to_string(f.floor());
  std::ostringstream os;
  os << "Y^" << f.top() << "*[";
  const auto& c = f.raw();
  for (std::size_t i = c.size(); i-- > 0;) os << f.field()->to_string(c[i]) << (i ? "," : "");
  os << "]@" << f.floor();
  return os.str();
}

Laurent parse_laurent(const FieldPtr& F, const std::string& s) {
  const auto at = s.rfind('@');
  if (at == std::string::npos) fail(ErrorKind::ParseError, "Laurent text needs '@floor'");
  int floor = 0;
  try {
    std::size_t used = 0;
    floor = std::stoi(s.substr(at + 1), &used);
    if (used != s.size() - at - 1) throw std::invalid_argument(s);
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "bad Laurent floor in '" + s + "'");
  }
  const std::string body = s.substr(0, at);
  if (body == "0") return Laurent::zero(F, floor);
  if (body.rfind("Y^", 0) != 0) fail(ErrorKind::ParseError, "Laurent text must start with 'Y^'");
  const auto star = body.find('*');
  if (star == std::string::npos || body.size() < star + 3 || body[star + 1] != '[' || body.back() != ']')
    fail(ErrorKind::ParseError, "bad Laurent coefficient list in '" + s + "'");
  int top = 0;
  try {
    top = std::stoi(body.substr(2, star - 2));
  } catch (const std::logic_error&) {
    fail(ErrorKind::ParseError, "bad Laurent exponent in '" + s + "'");
  }
  const std::string list = body.substr(star + 2, body.size() - star - 3);
  std::vector<std::string> toks;
  std::string cur;
  int depth = 0;
  for (char ch : list) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  toks.push_back(cur);
  if (static_cast<int>(toks.size()) != top - floor + 1) fail(ErrorKind::ParseError, "Laurent coefficient count does not match top and floor");
  std::vector<FqElem> c(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) c[toks.size() - 1 - i] = F->parse(toks[i]);
  if (!c.empty() && c.back() == 0) fail(ErrorKind::ParseError, "leading Laurent coefficient must be nonzero");
  return Laurent(F, floor, std::move(c));
}

}  // namespace ffdyn
