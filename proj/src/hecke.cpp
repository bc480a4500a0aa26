#include "ffdyn/hecke.hpp"

#include <random>

#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % k;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % k;
}

int pi_valuation(const FqPoly& x, const FqPoly& pi) { return x.is_zero() ? std::numeric_limits<int>::max() : valuation(x, pi); }

}  // namespace

HeckeVertex canonical_vertex(const PolyMat& m0, const FqPoly& pi) {
  const FieldPtr& F = pi.field();
  if (m0.det().is_zero()) fail(ErrorKind::DomainError, "lattice basis is singular");
  PolyMat m = m0;
  if (!m.c.is_zero()) {
    const XGcd x = xgcd(m.c, m.d);
    const FqPoly u11 = m.d / x.g, u21 = -(m.c / x.g);
    // Column operation by U = [[u11, s], [u21, t]], det U = 1.
    m = PolyMat{m.a * u11 + m.b * u21, m.a * x.s + m.b * x.t, FqPoly(F), x.g};
  }
  FqPoly a = m.a.monic(), d = m.d.monic();
  FqPoly b = m.b.scaled(F->inv(m.d.lead()));
  b = b % a;
  const int s = std::min({pi_valuation(a, pi), pi_valuation(b, pi), pi_valuation(d, pi)});
  if (s > 0) {
    const FqPoly ps = pow(pi, static_cast<unsigned>(s));
    a = a / ps;
    b = b / ps;
    d = d / ps;
  }
  const FqPoly det = a * d;
  const int depth = pi_valuation(det, pi);
  if (!(det == pow(pi, static_cast<unsigned>(depth))))
    fail(ErrorKind::DomainError, "lattice is not in the Hecke tree of the place " + to_string(pi));
  return {PolyMat{a, b, FqPoly(F), d}, depth};
}

HeckeVertex root_vertex(const FqPoly& pi) { return {poly_identity(pi.field()), 0}; }

std::vector<HeckeVertex> hecke_neighbors(const HeckeVertex& v, const FqPoly& pi) {
  const FieldPtr& F = pi.field();
  std::vector<HeckeVertex> out;
  std::uint64_t qn = 1;
  for (int i = 0; i < pi.degree(); ++i) qn *= F->q();
  const FqPoly one = FqPoly::constant(F, 1), zero(F);
  for (std::uint64_t idx = 0; idx < qn; ++idx)
    out.push_back(canonical_vertex(v.hnf * PolyMat{pi, poly_from_index(F, idx, pi.degree()), zero, one}, pi));
  out.push_back(canonical_vertex(v.hnf * PolyMat{one, zero, zero, pi}, pi));
  return out;
}

int tree_distance(const HeckeVertex& x, const HeckeVertex& y, const FqPoly& pi) {
  const PolyMat m = x.hnf.adjugate() * y.hnf;
  const FqPoly c = content(m);
  return pi_valuation(m.det(), pi) - 2 * pi_valuation(c, pi);
}

bool contains_vector(const HeckeVertex& v, const FqPoly& x, const FqPoly& y) {
  // Solve [[a, b], [0, d]] (s, t) = (x, y) over F_q[Y].
  const auto [t, rt] = divrem(y, v.hnf.d);
  if (!rt.is_zero()) return false;
  return divides(v.hnf.a, x - v.hnf.b * t);
}

SpherePoint vertex_to_sphere_point(const HeckeVertex& v, const FqPoly& pi) {
  const PolyMat& m = v.hnf;
  if (!(m.b % pi).is_zero() || !(m.d % pi).is_zero()) return canonical_point(m.b, m.d, pi, v.depth);
  return canonical_point(m.a, m.c, pi, v.depth);
}

HeckeVertex sphere_point_to_vertex(const SpherePoint& p, const FqPoly& pi) {
  const FqPoly pn = pow(pi, static_cast<unsigned>(p.n));
  const FqPoly zero(pi.field());
  if (p.n == 0) return root_vertex(pi);
  if (p.a.is_one()) return canonical_vertex(PolyMat{p.a, zero, p.b, pn}, pi);
  return canonical_vertex(PolyMat{p.a, pn, p.b, zero}, pi);
}

PolyMat RationalEnd::conjugator() const {
  const FieldPtr& F = u.field();
  if (v.is_zero()) return poly_identity(F);
  const XGcd x = xgcd(u, v);
  if (!x.g.is_one()) fail(ErrorKind::InvalidConfig, "end coordinates must be coprime");
  // u t - s v = 1 with t = x.s, s = -x.t.
  return {u, -x.t, v, x.s};
}

RationalEnd parse_end(const FieldPtr& F, const std::string& s) {
  if (s == "inf" || s == "infinity") return {FqPoly::constant(F, 1), FqPoly(F)};
  const auto slash = s.find('/');
  if (slash == std::string::npos) return {parse_poly(F, s), FqPoly::constant(F, 1)};
  RationalEnd xi{parse_poly(F, s.substr(0, slash)), parse_poly(F, s.substr(slash + 1))};
  if (xi.v.is_zero()) fail(ErrorKind::ParseError, "use 'inf' for the end at infinity");
  const FqPoly g = gcd(xi.u, xi.v);
  xi.u = xi.u / g;
  xi.v = xi.v / g;
  const FqElem li = F->inv(xi.v.lead());
  xi.u = xi.u.scaled(li);
  xi.v = xi.v.scaled(li);
  return xi;
}

std::string to_string(const RationalEnd& xi) {
  if (xi.v.is_zero()) return "inf";
  return to_string(xi.u) + "/" + to_string(xi.v);
}

HeckeVertex ray_vertex(const RationalEnd& xi, const FqPoly& pi, int n) {
  const PolyMat g = xi.conjugator();
  const FqPoly one = FqPoly::constant(pi.field(), 1);
  return canonical_vertex(g * diag(one, pow(pi, static_cast<unsigned>(n))) * g.adjugate(), pi);
}

PolyMat ray_conjugator(const RationalEnd& xi, const FqPoly& pi, int n) {
  // gamma diag(1, pi^-n) gamma^-1 is proportional to gamma diag(pi^n, 1) adj(gamma).
  const PolyMat g = xi.conjugator();
  const FqPoly one = FqPoly::constant(pi.field(), 1);
  return g * diag(pow(pi, static_cast<unsigned>(n)), one) * g.adjugate();
}

std::vector<HeckeVertex> children(const HeckeVertex& v, const FqPoly& pi) {
  std::vector<HeckeVertex> out;
  for (auto& w : hecke_neighbors(v, pi))
    if (w.depth == v.depth + 1) out.push_back(std::move(w));
  return out;
}

std::uint64_t sector_sphere_size(const SectorSpec& s, const FqPoly& pi, int n) {
  const int k = s.x.depth;
  if (n < k) return 0;
  if (k == 0) return sphere_size(pi, n);
  std::uint64_t qn = 1;
  for (int i = 0; i < pi.degree(); ++i) qn *= pi.F().q();
  std::uint64_t r = 1;
  for (int i = 0; i < n - k; ++i) r *= qn;
  return r;
}

std::vector<HeckeVertex> sector_sphere_enum(const SectorSpec& s, const FqPoly& pi, int n, std::uint64_t budget) {
  if (n < s.x.depth) return {};  // the sector only reaches radii >= its depth
  if (sector_sphere_size(s, pi, n) > budget) fail(ErrorKind::BudgetExceeded, "sector sphere exceeds the budget");
  std::vector<HeckeVertex> layer{s.x};
  for (int m = s.x.depth; m < n; ++m) {
    std::vector<HeckeVertex> next;
    for (const auto& v : layer)
      for (auto& w : children(v, pi)) next.push_back(std::move(w));
    layer = std::move(next);
  }
  return layer;
}

std::vector<HeckeVertex> sector_sphere_sample(const SectorSpec& s, const FqPoly& pi, int n, std::uint64_t count,
                                              std::uint64_t seed) {
  if (n < s.x.depth) return {};
  std::mt19937_64 rng(seed);
  std::vector<HeckeVertex> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    HeckeVertex v = s.x;
    for (int m = s.x.depth; m < n; ++m) {
      auto ch = children(v, pi);
      v = ch[uniform_below(rng, ch.size())];
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::string vertex_json(const HeckeVertex& v) {
  return "{\"hnf\":\"" + to_string(v.hnf) + "\",\"depth\":" + std::to_string(v.depth) + "}";
}

}  // namespace ffdyn
