#include "ffdyn/height.hpp"

#include "ffdyn/cf.hpp"
#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

int row_degree(const Laurent& x, const Laurent& y) {
  if (x.is_zero_to_precision() && y.is_zero_to_precision())
    fail(ErrorKind::PrecisionExhausted, "row vanishes to known precision");
  int d = kDegNegInf;
  if (!x.is_zero_to_precision()) d = x.top();
  if (!y.is_zero_to_precision()) d = std::max(d, y.top());
  if (x.floor() > d - kHeightGuard || y.floor() > d - kHeightGuard)
    fail(ErrorKind::PrecisionExhausted, "leading vector not certified by the guard band");
  return d;
}

FqElem coeff_or_zero(const Laurent& x, int k) { return x.coeff(k); }

void swap_rows(ReducedForm& r) {
  std::swap(r.rows.a, r.rows.c);
  std::swap(r.rows.b, r.rows.d);
  std::swap(r.gamma.a, r.gamma.c);
  std::swap(r.gamma.b, r.gamma.d);
  std::swap(r.deg0, r.deg1);
}

void reduce_in_place(ReducedForm& r, bool track) {
  const Field& F = *r.rows.a.field();
  const FieldPtr& Fp = r.rows.a.field();
  r.deg0 = row_degree(r.rows.a, r.rows.b);
  r.deg1 = row_degree(r.rows.c, r.rows.d);
  for (;;) {
    if (r.deg0 < r.deg1) swap_rows(r);
    const FqElem u0 = coeff_or_zero(r.rows.a, r.deg0), u1 = coeff_or_zero(r.rows.b, r.deg0);
    const FqElem w0 = coeff_or_zero(r.rows.c, r.deg1), w1 = coeff_or_zero(r.rows.d, r.deg1);
    if (F.sub(F.mul(u0, w1), F.mul(u1, w0)) != 0) return;
    const FqElem c = w0 != 0 ? F.div(u0, w0) : F.div(u1, w1);
    const int k = r.deg0 - r.deg1;
    r.rows.a = r.rows.a.minus_scaled_shift(c, k, r.rows.c);
    r.rows.b = r.rows.b.minus_scaled_shift(c, k, r.rows.d);
    if (track) {
      const FqPoly m = FqPoly::monomial(Fp, c, k);
      r.gamma.a -= m * r.gamma.c;
      r.gamma.b -= m * r.gamma.d;
    }
    r.deg0 = row_degree(r.rows.a, r.rows.b);
  }
}

}  // namespace

ReducedForm reduce_rows(const LaurentMat& g, bool track_gamma) {
  ReducedForm r{g, poly_identity(g.a.field()), 0, 0};
  reduce_in_place(r, track_gamma);
  return r;
}

SplittingType splitting_type(const LaurentMat& g) {
  const ReducedForm r = reduce_rows(g, false);
  return {-r.deg0, -r.deg1};
}

int height_infty(const LaurentMat& g) { return splitting_type(g).height(); }

LaurentMat laurent_from_poly(const PolyMat& m, int floor) {
  return m.map([&](const FqPoly& p) { return Laurent::from_poly(p, floor); });
}

LaurentMat embed_point(const PolyMat& A, const QuadMat& g, int rel_prec) {
  auto E = g.map([&](const QuadElem& x) { return embed(x, rel_prec); });
  auto comb = [&](const FqPoly& p, const Laurent& x, const FqPoly& r, const Laurent& y) {
    return x.mul_poly(p) + y.mul_poly(r);
  };
  return {comb(A.a, E.a, A.b, E.c), comb(A.a, E.b, A.b, E.d), comb(A.c, E.a, A.d, E.c), comb(A.c, E.b, A.d, E.d)};
}

GeodesicWalker::GeodesicWalker(const LaurentMat& g, bool track_gamma)
    : rf_(reduce_rows(g, track_gamma)), track_(track_gamma) {}

void GeodesicWalker::step() {
  rf_.rows.b = rf_.rows.b.shifted(-1);
  rf_.rows.d = rf_.rows.d.shifted(-1);
  reduce_in_place(rf_, track_);
}

std::vector<int> walk_heights(const LaurentMat& g, int steps) {
  std::vector<int> h;
  h.reserve(static_cast<std::size_t>(std::max(steps, 0)));
  GeodesicWalker w(g, false);
  for (int i = 0; i < steps; ++i) {
    if (i) w.step();
    h.push_back(w.height());
  }
  return h;
}

bool is_full_down(const std::vector<int>& h) {
  const std::size_t n = h.size();
  if (n < 2) return true;
  for (std::size_t i = 0; i < n; ++i) {
    const int prev = h[(i + n - 1) % n], cur = h[i], next = h[(i + 1) % n];
    if (std::abs(cur - next) != 1) return false;
    if (cur > 0 && prev > cur && next > cur) return false;
  }
  return true;
}

}  // namespace ffdyn
