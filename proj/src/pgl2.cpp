#include "ffdyn/pgl2.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "ffdyn/cf.hpp"
#include "ffdyn/error.hpp"
#include "ffdyn/nuadic.hpp"

namespace ffdyn {

PolyMat poly_identity(const FieldPtr& F) {
  return {FqPoly::constant(F, 1), FqPoly(F), FqPoly(F), FqPoly::constant(F, 1)};
}

PolyMat diag(const FqPoly& x, const FqPoly& y) { return {x, FqPoly(x.field()), FqPoly(x.field()), y}; }

FqPoly content(const PolyMat& m) { return gcd(gcd(m.a, m.b), gcd(m.c, m.d)); }

PolyMat mod(const PolyMat& m, const FqPoly& N) { return {m.a % N, m.b % N, m.c % N, m.d % N}; }

PolyMat mulmod(const PolyMat& x, const PolyMat& y, const FqPoly& N) { return mod(x * y, N); }

bool is_zero_mod(const PolyMat& m, const FqPoly& N) {
  return divides(N, m.a) && divides(N, m.b) && divides(N, m.c) && divides(N, m.d);
}

PGL2Elem::PGL2Elem(const PolyMat& m) {
  const FqPoly g = content(m);
  if (g.is_zero()) fail(ErrorKind::DomainError, "zero matrix is not in PGL_2");
  PolyMat r = g.is_one() ? m : PolyMat{m.a / g, m.b / g, m.c / g, m.d / g};
  if (r.det().is_zero()) fail(ErrorKind::DomainError, "singular matrix is not in PGL_2");
  const FqPoly* first = nullptr;
  for (const FqPoly* e : r.entries())
    if (!e->is_zero()) {
      first = e;
      break;
    }
  const FqElem li = r.a.F().inv(first->lead());
  m_ = {r.a.scaled(li), r.b.scaled(li), r.c.scaled(li), r.d.scaled(li)};
}

PGL2Elem::PGL2Elem(const Mat2<RatFunc>& m) {
  FqPoly l = FqPoly::constant(m.a.field(), 1);
  for (const RatFunc* e : m.entries()) l = (l * e->den()) / gcd(l, e->den());
  auto scale = [&](const RatFunc& x) { return (x.num() * l) / x.den(); };
  *this = PGL2Elem(PolyMat{scale(m.a), scale(m.b), scale(m.c), scale(m.d)});
}

std::string to_string(const PolyMat& m) {
  return to_string(m.a) + "," + to_string(m.b) + ";" + to_string(m.c) + "," + to_string(m.d);
}

std::string to_string(const PGL2Elem& g) { return to_string(g.mat()); }

namespace {

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> matrix_fields(const std::string& s) {
  auto rows = split_top(s, ';');
  if (rows.size() != 2) fail(ErrorKind::ParseError, "matrix text must be 'a,b;c,d', got '" + s + "'");
  auto r0 = split_top(rows[0], ','), r1 = split_top(rows[1], ',');
  if (r0.size() != 2 || r1.size() != 2) fail(ErrorKind::ParseError, "matrix text must be 'a,b;c,d', got '" + s + "'");
  return {r0[0], r0[1], r1[0], r1[1]};
}

}  // namespace

PolyMat parse_polymat(const FieldPtr& F, const std::string& s) {
  auto f = matrix_fields(s);
  return {parse_poly(F, f[0]), parse_poly(F, f[1]), parse_poly(F, f[2]), parse_poly(F, f[3])};
}

Mat2<RatFunc> parse_ratmat(const FieldPtr& F, const std::string& s) {
  auto f = matrix_fields(s);
  return {parse_ratfunc(F, f[0]), parse_ratfunc(F, f[1]), parse_ratfunc(F, f[2]), parse_ratfunc(F, f[3])};
}

int translation_length_infty(const PolyMat& g) {
  const FqPoly t = g.trace();
  const FqPoly D = g.det();
  if (D.is_zero()) fail(ErrorKind::DomainError, "singular matrix");
  if (t.is_zero()) return 0;
  return std::max(0, 2 * t.degree() - D.degree());
}

int translation_length_infty(const PGL2Elem& g) { return translation_length_infty(g.mat()); }

QuadElem mobius(const PolyMat& m, const QuadElem& x) {
  const QuadFieldPtr& K = x.quad_field();
  auto lift = [&](const FqPoly& p) { return QuadElem::from_poly(K, p); };
  return (lift(m.a) * x + lift(m.b)) / (lift(m.c) * x + lift(m.d));
}

QuadMat to_quad(const PolyMat& m, const QuadFieldPtr& K) {
  return m.map([&](const FqPoly& p) { return QuadElem::from_poly(K, p); });
}

LoxodromicData fixed_quadratic(const PGL2Elem& gamma) {
  const PolyMat& m = gamma.mat();
  const FieldPtr& F = gamma.field();
  LoxodromicData lox;
  lox.gamma = gamma;
  lox.ell = translation_length_infty(gamma);
  if (lox.ell == 0) fail(ErrorKind::NotLoxodromic, to_string(gamma) + " has zero translation length");
  if (m.c.is_zero()) fail(ErrorKind::NotIrrational, "fixed points of " + to_string(gamma) + " are rational");
  const FqPoly t = m.trace();
  const FqPoly delta = t * t - m.det().scaled(F->from_int(4));
  lox.K = make_quad_field(delta);
  const FqPoly one = FqPoly::constant(F, 1), two = FqPoly::constant(F, F->from_int(2));
  const QuadElem f1(lox.K, m.a - m.d, one, two * m.c);
  const QuadElem mu1(lox.K, t, one, two);
  const QuadElem f2 = f1.conj(), mu2 = mu1.conj();
  if (embed(mu1, 4).top() >= embed(mu2, 4).top()) {
    lox.f_plus = f1;
    lox.f_minus = f2;
    lox.lambda_plus = mu1;
    lox.lambda_minus = mu2;
  } else {
    lox.f_plus = f2;
    lox.f_minus = f1;
    lox.lambda_plus = mu2;
    lox.lambda_minus = mu1;
  }
  return lox;
}

QuadMat periodic_point_rep(const LoxodromicData& lox) {
  const QuadElem one = QuadElem::from_poly(lox.K, FqPoly::constant(lox.K->field(), 1));
  return {lox.f_plus, lox.f_minus, one, one};
}

SplitData split_data_at_nu(const PGL2Elem& gamma, const FqPoly& pi, int prec) {
  const FieldPtr& F = gamma.field();
  const PolyMat& m = gamma.mat();
  const FqPoly t = m.trace(), det = m.det();
  if ((det % pi).is_zero()) fail(ErrorKind::DomainError, "determinant is not a unit at the place");
  const FqPoly two = FqPoly::constant(F, F->from_int(2));
  const FqPoly delta = t * t - det.scaled(F->from_int(4));
  auto K = make_quad_field(delta);
  const LocalSplitting ls = local_splitting(delta, pi);
  SplitData out;
  out.e = ls.type == LocalType::Ramified ? 2 : 1;
  out.d = 1;
  if (ls.delta_valuation == 0) {
    const FqPoly D0 = delta % pi;
    if (ls.type == LocalType::Split) {
      const FqPoly s = *sqrt_mod_irreducible(D0, pi);
      const FqPoly z = mulmod(t + s, invmod(t - s, pi), pi);
      FqPoly x = z;
      while (!x.is_one()) {
        x = mulmod(x, z, pi);
        ++out.d;
      }
    } else {
      // (t + sqrt D0)/(t - sqrt D0) = (t^2 + D0 + 2 t sqrt D0) / (4 det) in k[sqrt D0].
      const FqPoly inv4det = invmod(det.scaled(F->from_int(4)), pi);
      const FqPoly zu = mulmod(t * t + D0, inv4det, pi), zv = mulmod(two * t, inv4det, pi);
      FqPoly u = zu, v = zv;
      while (!(u.is_one() && v.is_zero())) {
        FqPoly nu = (mulmod(u, zu, pi) + mulmod(mulmod(v, zv, pi), D0, pi)) % pi;
        FqPoly nv = (mulmod(u, zv, pi) + mulmod(v, zu, pi)) % pi;
        u = std::move(nu);
        v = std::move(nv);
        ++out.d;
      }
    }
  }
  const QuadElem lam(K, t, FqPoly::constant(F, 1), two);
  const QuadElem ratio = lam * lam / QuadElem::from_poly(K, det);
  const QuadElem z = ratio.pow(static_cast<std::uint64_t>(out.d)) - QuadElem::from_poly(K, FqPoly::constant(F, 1));
  const Rational v = quad_val_nu(z, pi, prec) * Rational(out.e);
  if (!v.is_integer() || v.num() <= 0) fail(ErrorKind::DomainError, "unexpected r = " + v.to_string());
  out.r = static_cast<int>(v.num());
  const int dt = t.degree();
  if (dt <= 0) fail(ErrorKind::NotLoxodromic, "trace has no pole at infinity");
  out.lom = Rational(static_cast<long long>(out.r) * pi.degree(), static_cast<long long>(dt) * out.e * out.d);
  return out;
}

Rational lom(const PGL2Elem& gamma, const FqPoly& pi) { return split_data_at_nu(gamma, pi).lom; }

std::string split_data_json(const SplitData& s) {
  return "{\"e\":" + std::to_string(s.e) + ",\"d\":" + std::to_string(s.d) + ",\"r\":" + std::to_string(s.r) +
         ",\"lom\":\"" + s.lom.to_string() + "\"}";
}

ConjugatePeriod find_primitive_period(const PolyMat& h, const PGL2Elem& gamma, int k_max) {
  const FqPoly dh = h.det();
  if (dh.is_zero()) fail(ErrorKind::DomainError, "singular conjugator");
  const PolyMat& g = gamma.mat();
  const PolyMat ha = h.adjugate();
  const bool unit = dh.degree() == 0;
  PolyMat gk = unit ? g : mod(g, dh);
  for (int k = 1; k <= k_max; ++k) {
    if (unit || is_zero_mod(h * gk * ha, dh)) {
      const PolyMat full = mat_pow(g, static_cast<unsigned>(k), poly_identity(g.a.field()));
      return {k, PGL2Elem(h * full * ha)};
    }
    gk = mulmod(gk, g, dh);
  }
  fail(ErrorKind::PeriodSearchExhausted, "no k <= " + std::to_string(k_max) + " puts the conjugate in PGL_2(F_q[Y])");
}

int cartan_distance(const PolyMat& g) {
  int md = kDegNegInf;
  for (const FqPoly* e : g.entries()) md = std::max(md, e->degree());
  return 2 * md - g.det().degree();
}

}  // namespace ffdyn
