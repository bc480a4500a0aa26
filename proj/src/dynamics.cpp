#include "ffdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "ffdyn/error.hpp"
#include "ffdyn/sphere.hpp"

namespace ffdyn {

Rational HeightHistogram::mass_below(int N) const {
  if (total == 0) fail(ErrorKind::DomainError, "empty histogram");
  std::uint64_t c = 0;
  for (const auto& [h, n] : counts)
    if (h < N) c += n;
  return Rational(static_cast<long long>(c), static_cast<long long>(total));
}

Rational HeightHistogram::mass_at_least(int N) const { return Rational(1) - mass_below(N); }

Rational HeightHistogram::mass(int h) const {
  if (total == 0) fail(ErrorKind::DomainError, "empty histogram");
  auto it = counts.find(h);
  return Rational(it == counts.end() ? 0 : static_cast<long long>(it->second), static_cast<long long>(total));
}

std::string to_json(const HeightHistogram& h) {
  std::ostringstream os;
  os << "{\"total\":" << h.total << ",\"counts\":{";
  bool first = true;
  for (const auto& [k, n] : h.counts) {
    os << (first ? "" : ",") << "\"" << k << "\":" << n;
    first = false;
  }
  os << "}}";
  return os.str();
}

HeightHistogram histogram_from_quotients(const std::vector<FqPoly>& quotients) {
  HeightHistogram hist;
  for (const FqPoly& a : quotients) {
    const int d = a.degree();
    if (d < 1) fail(ErrorKind::DomainError, "periodic partial quotients have positive degree");
    hist.add(0);
    for (int j = 1; j < d; ++j) hist.add(j, 2);
    hist.add(d);
  }
  return hist;
}

int point_height(const PolyMat& h, const QuadMat& g_f, int rel_prec) {
  for (int prec = rel_prec;; prec *= 2) {
    try {
      return height_infty(embed_point(h, g_f, prec));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || prec > (1 << 14)) throw;
    }
  }
}

namespace {

std::vector<PolyMat> finite_pgl2(const FieldPtr& F) {
  std::vector<PolyMat> out;
  const unsigned q = F->q();
  auto C = [&](FqElem x) { return FqPoly::constant(F, x); };
  for (FqElem b = 0; b < q; ++b)
    for (FqElem c = 0; c < q; ++c)
      for (FqElem d = 0; d < q; ++d)
        if (F->sub(d, F->mul(b, c)) != 0) out.push_back({C(1), C(b), C(c), C(d)});
  for (FqElem c = 1; c < q; ++c)
    for (FqElem d = 0; d < q; ++d) out.push_back({C(0), C(1), C(c), C(d)});
  return out;
}

struct Walk {
  std::vector<int> heights;
  std::vector<PolyMat> gammas;
};

Walk walk_with_gammas(const PolyMat& h, const QuadMat& g_f, int steps, const OrbitOptions& opt) {
  for (int prec = opt.rel_prec;; prec *= 2) {
    try {
      Walk w;
      GeodesicWalker gw(embed_point(h, g_f, prec), true);
      for (int i = 0; i <= steps; ++i) {
        if (i) gw.step();
        w.heights.push_back(gw.height());
        w.gammas.push_back(gw.form().gamma);
      }
      return w;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || prec >= opt.max_prec) throw;
    }
  }
}

// Smallest d | L such that the heights repeat with period d and some element
// of Gamma_inf carries the walk point at the lowest index a to the one at a + d.
int primitive_walk_period(const Walk& w, int L, const QuadElem& f) {
  const FieldPtr& F = f.delta().field();
  std::vector<PolyMat> stab;
  for (int d = 1; d < L; ++d) {
    if (L % d) continue;
    bool periodic = true;
    for (int i = d; i < L && periodic; ++i) periodic = w.heights[i] == w.heights[i - d];
    if (!periodic) continue;
    const auto a = static_cast<std::size_t>(std::min_element(w.heights.begin(), w.heights.begin() + d) - w.heights.begin());
    // The stabilizer below is the one of the standard vertex, so the walk must sit at height 0.
    if (w.heights[a] != 0) continue;
    if (stab.empty()) stab = finite_pgl2(F);
    const PolyMat gb = w.gammas[a + static_cast<std::size_t>(d)].adjugate();
    const PolyMat& ga = w.gammas[a];
    for (const PolyMat& s : stab)
      if (mobius(gb * s * ga, f) == f) return d;
  }
  return L;
}

}  // namespace

PeriodicOrbit analyze_periodic(const PolyMat& h, const LoxodromicData& lox, const OrbitOptions& opt) {
  PeriodicOrbit o;
  o.h = h;
  o.conj = find_primitive_period(h, lox.gamma, opt.k_max);
  o.ell_delta = translation_length_infty(o.conj.delta);
  o.f = mobius(h, lox.f_plus);
  const QuadMat g_f = periodic_point_rep(lox);
  o.start_height = point_height(h, g_f, opt.rel_prec);

  int lambda_fast = 0;
  HeightHistogram fast;
  if (opt.path != OrbitPath::Walk) {
    o.cf = cf_expand_surd(o.f);
    const std::vector<FqPoly> word(o.cf.period.begin(), o.cf.period.begin() + static_cast<std::ptrdiff_t>(o.cf.twisted_length));
    fast = histogram_from_quotients(word);
    lambda_fast = 2 * primitive_period_degree(o.cf);
    o.lambda = lambda_fast;
    o.histogram = fast;
  }
  if (opt.path != OrbitPath::Fast) {
    const int L = o.ell_delta;
    const Walk w = walk_with_gammas(h, g_f, L, opt);
    if (w.heights[static_cast<std::size_t>(L)] != w.heights[0])
      fail(ErrorKind::DomainError, "walk heights do not close up after the translation length of delta");
    const int lam = primitive_walk_period(w, L, o.f);
    o.profile.assign(w.heights.begin(), w.heights.begin() + lam);
    HeightHistogram walked;
    for (int x : o.profile) walked.add(x);
    if (opt.path == OrbitPath::Both && (lam != lambda_fast || !(walked == fast)))
      fail(ErrorKind::DomainError, "continued fraction coding and geodesic walk disagree: lambda " +
                                       std::to_string(lambda_fast) + " vs " + std::to_string(lam));
    o.lambda = lam;
    o.histogram = walked;
  }
  return o;
}

PolyMat ray_point(const RationalEnd& xi, const FqPoly& pi, int n) { return ray_vertex(xi, pi, n).hnf.adjugate(); }

int EscapeSeries::kappa_max(int kappa_from) const {
  int k = 0;
  for (const auto& r : rows)
    if (r.n >= kappa_from) k = std::max(k, std::abs(r.kappa));
  return k;
}

EscapeSeries ray_escape_experiment(const LoxodromicData& lox, const RationalEnd& xi, const FqPoly& pi,
                                   const std::vector<int>& ns, int N, const OrbitOptions& opt) {
  EscapeSeries s;
  s.N = N;
  for (int n : ns) {
    const PeriodicOrbit o = analyze_periodic(ray_point(xi, pi, n), lox, opt);
    EscapeRow r;
    r.n = n;
    r.ht = o.start_height;
    r.lambda = o.lambda;
    r.mass_below = o.histogram.mass_below(N);
    r.bound = r.ht > N ? Rational(2LL * (r.ht - N), o.lambda) : Rational(0);
    r.kappa = r.ht - n * pi.degree();
    s.rows.push_back(r);
  }
  return s;
}

std::string to_csv(const EscapeSeries& s) {
  std::ostringstream os;
  os << "n,ht,lambda,mass_below,bound,kappa\n";
  for (const auto& r : s.rows)
    os << r.n << ',' << r.ht << ',' << r.lambda << ',' << r.mass_below.to_string() << ',' << r.bound.to_string() << ','
       << r.kappa << '\n';
  return os.str();
}

std::vector<int> lom_subsequence(const SplitData& sd, int p, int k_max) {
  std::vector<int> out;
  long long pk = 1;
  for (int k = 0; k <= k_max; ++k, pk *= p) {
    const long long n = sd.r * pk / sd.e;
    if (n >= 1 && (out.empty() || out.back() != n)) out.push_back(static_cast<int>(n));
  }
  return out;
}

std::uint64_t ceil_pow(int p, long long x, int r) {
  std::uint64_t pj = 1;
  while (static_cast<long long>(pj) * r < x) pj *= static_cast<std::uint64_t>(p);
  return pj;
}

std::uint64_t orbit_bound(const SplitData& s, int p, int n, int kappa) {
  return static_cast<std::uint64_t>(s.e) * static_cast<std::uint64_t>(s.d) * ceil_pow(p, n + kappa, s.r);
}

int calibrate_kappa(const SplitData& s, int p, const std::vector<OrbitTableRow>& rows, std::size_t upto) {
  upto = std::min(upto, rows.size());
  for (int kappa = 0;; ++kappa) {
    bool ok = true;
    for (std::size_t i = 0; i < upto && ok; ++i) ok = rows[i].m <= orbit_bound(s, p, rows[i].n, kappa);
    if (ok) return kappa;
    if (kappa > (1 << 24)) fail(ErrorKind::DomainError, "no calibration constant found");
  }
}

bool OrbitTable::linear_bound_holds() const {
  for (const auto& r : rows) {
    const std::uint64_t lhs = r.m * static_cast<std::uint64_t>(split.r);
    const std::uint64_t rhs = static_cast<std::uint64_t>(split.e * split.d * p) * static_cast<std::uint64_t>(r.n + kappa);
    if (lhs > rhs) return false;
  }
  return true;
}

OrbitTable theorem31_table(const PGL2Elem& gamma, const FqPoly& pi, int n_full, int n_max, std::uint64_t budget) {
  OrbitTable t;
  t.split = split_data_at_nu(gamma, pi);
  t.p = static_cast<int>(pi.field()->p());
  const auto full = n_full > 0 ? max_orbit_sizes(gamma, pi, n_full, budget) : std::vector<std::uint64_t>{};
  const auto ray = ray_orbit_sizes(gamma, pi, n_max);
  for (int n = 1; n <= n_max; ++n) {
    OrbitTableRow r;
    r.n = n;
    r.full_sphere = n <= n_full;
    r.m = r.full_sphere ? std::max(full[n - 1], ray[n - 1]) : ray[n - 1];
    t.rows.push_back(r);
  }
  t.kappa = calibrate_kappa(t.split, t.p, t.rows, t.rows.size());
  for (auto& r : t.rows) r.bound = orbit_bound(t.split, t.p, r.n, t.kappa);
  return t;
}

std::string to_csv(const OrbitTable& t) {
  std::ostringstream os;
  os << "n,m,source,bound,kappa\n";
  for (const auto& r : t.rows)
    os << r.n << ',' << r.m << ',' << (r.full_sphere ? "sphere" : "ray") << ',' << r.bound << ',' << t.kappa << '\n';
  return os.str();
}

std::uint64_t stabilizer_size(int q, int h) {
  const auto Q = static_cast<std::uint64_t>(q);
  if (h == 0) return Q * Q * Q - Q;
  std::uint64_t s = Q - 1;
  for (int i = 0; i <= h; ++i) s *= Q;
  return s;
}

namespace {

bool parity_ok(int h, int parity) { return parity == kAnyParity || (h & 1) == parity; }

double model_weight(int q, int h, int parity) {
  if (h < 0 || !parity_ok(h, parity)) return 0.0;
  return 1.0 / static_cast<double>(stabilizer_size(q, h));
}

// Sum of weights over heights >= H; terms decay geometrically.
double weight_tail(int q, int H, int parity) {
  double s = 0;
  for (int h = std::max(H, 0);; ++h) {
    const double w = model_weight(q, h, parity);
    s += w;
    // Past h = 64 the remaining weights are below 3^-64 of the total.
    if (h >= std::max(H, 0) + 64) return s;
  }
}

}  // namespace

double model_mass(int q, int h, int parity) { return model_weight(q, h, parity) / weight_tail(q, 0, parity); }

double model_tail(int q, int H, int parity) { return weight_tail(q, H, parity) / weight_tail(q, 0, parity); }

double total_variation(const HeightHistogram& emp, int q, int parity) {
  double s = 0;
  const int top = emp.max_height();
  for (int h = 0; h <= top; ++h) s += std::abs(emp.mass(h).to_double() - model_mass(q, h, parity));
  return 0.5 * (s + model_tail(q, top + 1, parity));
}

int sphere_height_parity(int ht0, const FqPoly& pi, int n) { return (ht0 + n * pi.degree()) & 1; }

HeightHistogram sector_sphere_distribution(const SectorSpec& s, const FqPoly& pi, int n, const QuadMat& g_f,
                                            SectorMode mode, std::uint64_t count, std::uint64_t seed,
                                            std::uint64_t budget) {
  if (n < s.x.depth) fail(ErrorKind::OutOfRange, "sector sphere of radius " + std::to_string(n) + " is empty");
  const auto verts = mode == SectorMode::Enum ? sector_sphere_enum(s, pi, n, budget)
                                               : sector_sphere_sample(s, pi, n, count, seed);
  HeightHistogram hist;
  for (const auto& v : verts) hist.add(point_height(v.hnf.adjugate(), g_f));
  return hist;
}

namespace {

// Quotient a = lead * monic; the monic part is interned to an id.
struct WordLetter {
  int id;
  FqElem lead;
};

std::vector<WordLetter> letters(const std::vector<FqPoly>& w, std::unordered_map<std::string, int>& ids) {
  std::vector<WordLetter> out;
  for (const FqPoly& a : w) {
    const std::string key = to_string(a.monic());
    auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
    out.push_back({it->second, a.lead()});
  }
  return out;
}

}  // namespace

int cyclic_window(const std::vector<FqPoly>& a, const std::vector<FqPoly>& b) {
  if (a.empty() || b.empty()) return 0;
  const Field& F = *a.front().field();
  std::unordered_map<std::string, int> ids;
  const auto A = letters(a, ids), B = letters(b, ids);
  const std::size_t La = A.size(), Lb = B.size(), cap = std::min(La, Lb);
  std::size_t best = 0;
  for (std::size_t i = 0; i < La && best < cap; ++i)
    for (std::size_t j = 0; j < Lb && best < cap; ++j) {
      if (A[i].id != B[j].id) continue;
      const FqElem c = F.div(B[j].lead, A[i].lead), ci = F.inv(c);
      std::size_t t = 1;
      while (t < cap) {
        const auto& x = A[(i + t) % La];
        const auto& y = B[(j + t) % Lb];
        if (x.id != y.id || y.lead != F.mul(x.lead, t % 2 ? ci : c)) break;
        ++t;
      }
      best = std::max(best, t);
    }
  return static_cast<int>(best);
}

bool cyclic_equivalent(const std::vector<FqPoly>& a, const std::vector<FqPoly>& b) {
  return a.size() == b.size() && !a.empty() && cyclic_window(a, b) == static_cast<int>(a.size());
}

CloseSearchReport lemma_close_search(const SectorSpec& s, const PeriodicOrbit& target, const FqPoly& pi, int n,
                                     const LoxodromicData& lox, std::uint64_t budget) {
  CloseSearchReport rep;
  rep.n = n;
  const std::vector<FqPoly>& word = target.cf.period;
  rep.target_length = static_cast<int>(word.size());
  for (const auto& v : sector_sphere_enum(s, pi, n, budget)) {
    ++rep.points;
    const CFExpansion cf = cf_expand_surd(mobius(v.hnf.adjugate(), lox.f_plus));
    const int w = cyclic_window(word, cf.period);
    const bool full = cyclic_equivalent(word, cf.period);
    if (!rep.witness || w > rep.window || (full && !rep.full_match)) {
      rep.window = std::max(rep.window, w);
      rep.witness = v;
    }
    rep.full_match = rep.full_match || full;
    if (rep.full_match && rep.window == rep.target_length) break;
  }
  return rep;
}

TrendReport conjecture2_scan(const LoxodromicData& lox, const RationalEnd& xi, const FqPoly& pi,
                             const std::vector<int>& ns, int N, const OrbitOptions& opt) {
  const EscapeSeries s = ray_escape_experiment(lox, xi, pi, ns, N, opt);
  TrendReport t;
  t.N = N;
  for (const auto& r : s.rows) {
    TrendRow row{r.n, r.mass_below};
    if (!t.rows.empty() && row.mass_below > t.rows.back().mass_below) ++t.increases;
    t.sup_scaled = std::max(t.sup_scaled, row.scaled());
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace ffdyn
