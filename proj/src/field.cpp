#include "ffdyn/field.hpp"

#include <algorithm>
#include <sstream>

#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomial helpers over F_p used only while building extension tables.
using PPoly = std::vector<std::uint32_t>;

void trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pp_mod(PPoly a, const PPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint32_t inv_lead = 1;
  for (std::uint32_t t = 1; t < p; ++t)
    if (t * m.back() % p == 1) inv_lead = t;
  while (a.size() > dm) {
    const std::uint32_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

PPoly pp_from_index(std::uint64_t idx, std::uint32_t p, std::size_t len) {
  PPoly f(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    f[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return f;
}

bool pp_irreducible(const PPoly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PPoly g = pp_from_index(idx, p, d);
      g.push_back(1);
      if (pp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime_u32(p)) fail(ErrorKind::InvalidConfig, "characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) fail(ErrorKind::InvalidConfig, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  if (p >= (1u << 16) || (e > 1 && q > 1024))
    fail(ErrorKind::InvalidConfig, "field too large");
  auto F = std::shared_ptr<Field>(new Field());
  F->p_ = p;
  F->e_ = e;
  F->q_ = static_cast<std::uint32_t>(q);
  F->prime_ = (e == 1);
  if (e == 1) {
    F->modulus_ = {0, 1};
    return F;
  }
  std::uint64_t count = q;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PPoly f = pp_from_index(idx, p, e);
    f.push_back(1);
    if (f[0] != 0 && pp_irreducible(f, p)) {
      F->modulus_ = f;
      break;
    }
  }
  const std::uint32_t Q = F->q_;
  F->add_.assign(std::size_t{Q} * Q, 0);
  F->mul_.assign(std::size_t{Q} * Q, 0);
  F->neg_.assign(Q, 0);
  F->inv_.assign(Q, 0);
  std::vector<PPoly> elems(Q);
  for (std::uint32_t a = 0; a < Q; ++a) elems[a] = pp_from_index(a, p, e);
  auto index_of = [&](const PPoly& f) {
    std::uint32_t idx = 0, pw = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      idx += f[i] * pw;
      pw *= p;
    }
    return idx;
  };
  for (std::uint32_t a = 0; a < Q; ++a) {
    PPoly n(e);
    for (std::uint32_t i = 0; i < e; ++i) n[i] = (p - elems[a][i]) % p;
    F->neg_[a] = index_of(n);
    for (std::uint32_t b = 0; b < Q; ++b) {
      PPoly s(e);
      for (std::uint32_t i = 0; i < e; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
      F->add_[a * Q + b] = index_of(s);
      PPoly prod(2 * e - 1, 0);
      for (std::uint32_t i = 0; i < e; ++i)
        for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
      F->mul_[a * Q + b] = index_of(pp_mod(prod, F->modulus_, p));
    }
  }
  for (std::uint32_t a = 1; a < Q; ++a)
    for (std::uint32_t b = 1; b < Q; ++b)
      if (F->mul_[a * Q + b] == 1) F->inv_[a] = b;
  return F;
}

FieldPtr Field::make_order(std::uint32_t q) {
  if (q < 2) fail(ErrorKind::InvalidConfig, "field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) fail(ErrorKind::InvalidConfig, "field order " + std::to_string(q) + " is not a prime power");
  return make(p, e);
}

FqElem Field::inv(FqElem a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  if (!prime_) return inv_[a];
  // Extended Euclid on (a, p).
  long long t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    long long qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p_;
  return static_cast<FqElem>(t);
}

FqElem Field::pow(FqElem a, std::uint64_t k) const {
  FqElem result = 1, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FqElem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<FqElem>(r);
}

std::optional<FqElem> Field::sqrt(FqElem a) const {
  if (a == 0) return FqElem{0};
  for (FqElem x = 1; x < q_; ++x)
    if (mul(x, x) == a) return x;
  return std::nullopt;
}

std::uint64_t Field::mult_order(FqElem a) const {
  if (a == 0) fail(ErrorKind::DivisionByZero, "multiplicative order of zero");
  std::uint64_t k = 1;
  for (FqElem x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

std::vector<std::uint32_t> Field::digits(FqElem a) const {
  std::vector<std::uint32_t> d(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FqElem Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() > e_) fail(ErrorKind::ParseError, "too many digits for F_q element");
  FqElem idx = 0, pw = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= p_) fail(ErrorKind::ParseError, "digit out of range");
    idx += d[i] * pw;
    pw *= p_;
  }
  return idx;
}

std::string Field::to_string(FqElem a) const {
  if (a < p_) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  auto d = digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ']';
  return os.str();
}

FqElem Field::parse(const std::string& s) const {
  auto parse_uint = [](const std::string& t) -> std::uint32_t {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; }))
      fail(ErrorKind::ParseError, "bad field element '" + t + "'");
    if (t.size() > 9) fail(ErrorKind::ParseError, "field element out of range");
    return static_cast<std::uint32_t>(std::stoul(t));
  };
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') fail(ErrorKind::ParseError, "unterminated digit vector '" + s + "'");
    std::vector<std::uint32_t> d;
    std::string inner = s.substr(1, s.size() - 2), tok;
    std::istringstream is(inner);
    while (std::getline(is, tok, ',')) d.push_back(parse_uint(tok));
    return from_digits(d);
  }
  std::uint32_t v = parse_uint(s);
  if (v >= p_) fail(ErrorKind::ParseError, "coefficient " + s + " outside 0.." + std::to_string(p_ - 1));
  return v;
}

void Field::mul_full(std::span<const FqElem> a, std::span<const FqElem> b, std::vector<FqElem>& out) const {
  if (a.empty() || b.empty()) {
    out.clear();
    return;
  }
  mul_high(a, b, 0, out);
}

void Field::mul_high(std::span<const FqElem> a, std::span<const FqElem> b, std::size_t lo,
                     std::vector<FqElem>& out) const {
  if (a.empty() || b.empty() || lo > a.size() + b.size() - 2) {
    out.clear();
    return;
  }
  const std::size_t top = a.size() + b.size() - 2;
  out.assign(top - lo + 1, 0);
  if (prime_) {
    std::vector<std::uint64_t> acc(top - lo + 1, 0);
    const std::uint64_t P = p_;
    // Periodic reduction keeps accumulators below 2^63.
    const std::size_t block = P < 256 ? (1u << 20) : 1024;
    std::size_t since = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      const std::size_t jlo = lo > i ? lo - i : 0;
      for (std::size_t j = jlo; j < b.size(); ++j) acc[i + j - lo] += ai * b[j];
      if (++since == block) {
        for (auto& x : acc) x %= P;
        since = 0;
      }
    }
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<FqElem>(acc[k] % P);
    return;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const std::size_t jlo = lo > i ? lo - i : 0;
    for (std::size_t j = jlo; j < b.size(); ++j) {
      FqElem& o = out[i + j - lo];
      o = add_[o * q_ + mul_[a[i] * q_ + b[j]]];
    }
  }
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a && b && (a == b || *a == *b); }

}  // namespace ffdyn
