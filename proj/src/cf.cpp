#include "ffdyn/cf.hpp"

#include <unordered_map>

#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

struct StateHash {
  std::size_t operator()(const SurdState& s) const { return s.P.hash() * 31 + s.Q.hash(); }
};

// Q2 = c * Q1 for a constant c != 0, or 0 if not proportional.
FqElem constant_ratio(const FqPoly& Q1, const FqPoly& Q2) {
  if (Q1.degree() != Q2.degree() || Q1.is_zero()) return 0;
  const Field& F = Q1.F();
  const FqElem c = F.div(Q2.lead(), Q1.lead());
  return Q1.scaled(c) == Q2 ? c : 0;
}

}  // namespace

Laurent embed(const QuadElem& x, int rel_prec) {
  const int m = x.delta().degree() / 2;
  if (x.is_rational()) return Laurent::from_ratfunc(x.rational_part(), rel_prec);
  // |a + b g| |a - b g| = |a^2 - b^2 D| >= 1 bounds the cancellation.
  const int size = std::max(x.a().degree(), x.b().degree() + m);
  const Laurent g = sqrt_laurent(x.delta(), rel_prec + 2 * size + 2);
  const Laurent bg = g.mul_poly(x.b());
  const Laurent num = Laurent::from_poly(x.a(), bg.floor()) + bg;
  const Laurent den = Laurent::from_poly(x.c(), x.c().degree() - rel_prec - 1);
  const Laurent r = num * den.inv();
  return r.is_zero_to_precision() ? r : r.truncated_at(std::max(r.floor(), r.top() - rel_prec + 1));
}

CFExpansion cf_expand_surd(const QuadElem& f, std::size_t max_steps) {
  if (f.is_rational()) fail(ErrorKind::NotIrrational, "continued fraction of a rational element");
  const FqPoly& delta = f.delta();
  const Field& F = delta.F();
  if (delta.degree() % 2 != 0 || !F.is_square(delta.lead()))
    fail(ErrorKind::NotRealQuadratic, "sqrt(" + to_string(delta) + ") does not embed in K_inf");
  // x0 = (ac + bc sqrt(delta)) / c^2.
  const FqPoly W = f.b() * f.c();
  const FqPoly D = W * W * delta;
  const int m = D.degree() / 2;
  const Laurent root = sqrt_laurent(delta, m + 4).mul_poly(W);
  const FqPoly s = integer_fractional_split(root).first;

  SurdState st{f.a() * f.c(), f.c() * f.c()};
  std::unordered_map<SurdState, std::size_t, StateHash> seen;
  std::vector<SurdState> states;
  std::vector<FqPoly> quotients;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    auto it = seen.find(st);
    if (it != seen.end()) {
      CFExpansion cf;
      const std::size_t start = it->second;
      cf.preperiod.assign(quotients.begin(), quotients.begin() + static_cast<long>(start));
      cf.period.assign(quotients.begin() + static_cast<long>(start), quotients.end());
      cf.period_states.assign(states.begin() + static_cast<long>(start), states.end());
      const std::size_t L = cf.period.size();
      cf.twisted_length = L;
      for (std::size_t d = 1; d < L; ++d) {
        if (L % d != 0) continue;
        const SurdState& a = cf.period_states[0];
        const SurdState& b = cf.period_states[d];
        if (a.P != b.P) continue;
        // (P + sqrt D)/Q' = c (P + sqrt D)/Q with Q' = Q / c.
        const FqElem r = constant_ratio(a.Q, b.Q);
        if (r == 0) continue;
        cf.twisted_length = d;
        cf.twist = F.inv(r);
        break;
      }
      return cf;
    }
    seen.emplace(st, states.size());
    states.push_back(st);
    const FqPoly a = (st.P + s) / st.Q;
    quotients.push_back(a);
    const FqPoly P1 = a * st.Q - st.P;
    const FqPoly Q1 = (D - P1 * P1) / st.Q;
    st = SurdState{P1, Q1};
  }
  fail(ErrorKind::PeriodNotFound, "no repeated complete quotient within " + std::to_string(max_steps) + " steps");
}

std::vector<FqPoly> cf_expand_laurent(const Laurent& f, std::size_t max_terms) {
  std::vector<FqPoly> out;
  Laurent x = f;
  while (out.size() < max_terms) {
    if (x.floor() > 0) break;
    auto [a, frac] = integer_fractional_split(x);
    out.push_back(a);
    if (frac.is_zero_to_precision()) break;
    const Laurent next = frac.inv();
    if (next.floor() > 0) break;
    x = next;
  }
  return out;
}

std::vector<Convergent> convergents(const std::vector<FqPoly>& a) {
  std::vector<Convergent> out;
  if (a.empty()) return out;
  const FieldPtr& F = a[0].field();
  FqPoly pm2(F), pm1 = FqPoly::constant(F, 1), qm2 = FqPoly::constant(F, 1), qm1(F);
  for (const auto& ai : a) {
    FqPoly p = ai * pm1 + pm2, q = ai * qm1 + qm2;
    out.push_back({p, q});
    pm2 = std::move(pm1);
    pm1 = p;
    qm2 = std::move(qm1);
    qm1 = q;
  }
  return out;
}

int primitive_period_degree(const CFExpansion& cf) {
  int s = 0;
  for (std::size_t i = 0; i < cf.twisted_length; ++i) s += cf.period[i].degree();
  return s;
}

std::string cf_to_json(const CFExpansion& cf) {
  auto list = [](const std::vector<FqPoly>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ",\"" : "\"") + to_string(v[i]) + "\"";
    return s + "]";
  };
  return "{\"preperiod\":" + list(cf.preperiod) + ",\"period\":" + list(cf.period) + "}";
}

}  // namespace ffdyn
