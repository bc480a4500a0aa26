#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ffdyn/dynamics.hpp"
#include "ffdyn/error.hpp"
#include "ffdyn/sphere.hpp"
#include "support.hpp"

using namespace ffdyn;
using ffdyn::testing::P;

namespace {

struct Setup {
  FieldPtr F = Field::make(3);
  PGL2Elem gamma{parse_polymat(F, "Y,1;1,0")};
  LoxodromicData lox = fixed_quadratic(gamma);
  QuadMat g_f = periodic_point_rep(lox);
  RationalEnd inf = parse_end(F, "inf");
};

PolyMat random_gamma(std::mt19937_64& rng, const FieldPtr& F) {
  PolyMat g = poly_identity(F);
  const PolyMat w{FqPoly(F), FqPoly::constant(F, 1), FqPoly::constant(F, 1), FqPoly(F)};
  for (int i = 0; i < 3; ++i)
    g = g * PolyMat{FqPoly::constant(F, 1), testing::random_poly(rng, F, 2), FqPoly(F), FqPoly::constant(F, 1)} * w;
  return g;
}

Rational total_mass(const HeightHistogram& h) {
  Rational s(0);
  for (const auto& [k, c] : h.counts) s = s + h.mass(k);
  return s;
}

}  // namespace

TEST_CASE("histogram coding of partial quotients") {
  auto F = Field::make(3);
  const auto h = histogram_from_quotients({P(F, "Y"), P(F, "Y^3+1")});
  // degree 1: 0, 1; degree 3: 0, 1, 2, 3, 2, 1
  CHECK(h.total == 8);
  CHECK(h.counts == std::map<int, std::uint64_t>{{0, 2}, {1, 3}, {2, 2}, {3, 1}});
  CHECK(h.mass_below(2) == Rational(5, 8));
  CHECK(h.mass_at_least(2) == Rational(3, 8));
  CHECK(h.max_height() == 3);
  CHECK(to_json(h) == "{\"total\":8,\"counts\":{\"0\":2,\"1\":3,\"2\":2,\"3\":1}}");
}

TEST_CASE("the root orbit is the orbit of gamma itself") {
  Setup s;
  const PeriodicOrbit o = analyze_periodic(poly_identity(s.F), s.lox, {OrbitPath::Both});
  CHECK(o.conj.k == 1);
  CHECK(o.conj.delta == s.gamma);
  CHECK(o.lambda == s.lox.ell);
  CHECK(o.ell_delta == 2);
  CHECK(o.cf.period == std::vector<FqPoly>{P(s.F, "Y")});
  CHECK(o.histogram.counts == std::map<int, std::uint64_t>{{0, 1}, {1, 1}});
  CHECK(is_full_down(o.profile));
}

TEST_CASE("period identity, normalization and full-down on ray and random orbits") {
  Setup s;
  std::mt19937_64 rng(13);
  for (const char* ps : {"Y", "Y^2+1"}) {
    const FqPoly pi = P(s.F, ps);
    for (int n = 0; n <= 6; ++n) {
      const PeriodicOrbit o = analyze_periodic(ray_point(s.inf, pi, n), s.lox, {OrbitPath::Both});
      CHECK(o.lambda == 2 * primitive_period_degree(o.cf));
      CHECK(o.lambda == o.ell_delta);
      CHECK(o.histogram.total == static_cast<std::uint64_t>(o.lambda));
      CHECK(total_mass(o.histogram) == Rational(1));
      CHECK(is_full_down(o.profile));
      CHECK(std::find(o.profile.begin(), o.profile.end(), o.start_height) != o.profile.end());
      CHECK(mobius(o.conj.delta.mat(), o.f) == o.f);
    }
  }
  for (int i = 0; i < 10; ++i) {
    const PolyMat h = diag(P(s.F, "Y+1"), FqPoly::constant(s.F, 1)) * random_gamma(rng, s.F);
    const PeriodicOrbit o = analyze_periodic(h, s.lox, {OrbitPath::Both});
    CHECK(o.lambda == 2 * primitive_period_degree(o.cf));
    CHECK(is_full_down(o.profile));
  }
}

TEST_CASE("orbits are invariant under left Gamma_inf translation") {
  Setup s;
  std::mt19937_64 rng(3);
  const PolyMat h = ray_point(s.inf, P(s.F, "Y^2+1"), 3);
  const PeriodicOrbit o = analyze_periodic(h, s.lox);
  for (int i = 0; i < 10; ++i) {
    const PolyMat g = random_gamma(rng, s.F);
    const PeriodicOrbit t = analyze_periodic(g * h, s.lox, {OrbitPath::Both});
    CHECK(t.lambda == o.lambda);
    CHECK(t.histogram == o.histogram);
    CHECK(t.start_height == o.start_height);
    CHECK(t.conj.k == o.conj.k);
    CHECK(t.conj.delta == PGL2Elem(g) * o.conj.delta * PGL2Elem(g).inverse());
  }
}

TEST_CASE("period is bounded by the translation length times the maximal orbit size") {
  Setup s;
  for (const char* ps : {"Y", "Y^2+1"}) {
    const FqPoly pi = P(s.F, ps);
    const int nmax = pi.degree() == 1 ? 10 : 5;
    const auto m = max_orbit_sizes(s.gamma, pi, nmax, 1 << 22);
    for (int n = 1; n <= nmax; ++n) {
      const PeriodicOrbit o = analyze_periodic(ray_point(s.inf, pi, n), s.lox);
      CHECK(static_cast<std::uint64_t>(o.lambda) <= static_cast<std::uint64_t>(s.lox.ell) * m[static_cast<std::size_t>(n - 1)]);
    }
  }
}

TEST_CASE("escape series: bound, cumulative monotonicity and vacuous rows") {
  Setup s;
  const FqPoly pi = P(s.F, "Y^2+1");
  const EscapeSeries e = ray_escape_experiment(s.lox, s.inf, pi, {1, 2, 3, 4, 6, 9, 13}, 10);
  REQUIRE(e.rows.size() == 7);
  for (const auto& r : e.rows) {
    CHECK(r.bound_holds());
    CHECK(r.mass_below + r.mass_at_least() == Rational(1));
    CHECK(r.ht == 2 * r.n + 1);
    CHECK(r.kappa == 1);
    if (r.ht <= e.N) CHECK(r.bound == Rational(0));
  }
  CHECK(e.kappa_max(5) == 1);
  const std::string csv = to_csv(e);
  CHECK(csv.rfind("n,ht,lambda,mass_below,bound,kappa\n", 0) == 0);
  // N -> mass below N is a cumulative distribution.
  const PeriodicOrbit o = analyze_periodic(ray_point(s.inf, pi, 13), s.lox);
  Rational prev(0);
  for (int N = 0; N <= o.histogram.max_height() + 1; ++N) {
    CHECK(o.histogram.mass_below(N) >= prev);
    prev = o.histogram.mass_below(N);
  }
  CHECK(prev == Rational(1));
}

TEST_CASE("subsequence floor(r p^k / e)") {
  Setup s;
  CHECK(lom_subsequence(split_data_at_nu(s.gamma, P(s.F, "Y^2+1")), 3, 4) == std::vector<int>{1, 4, 13, 40});
  CHECK(lom_subsequence(split_data_at_nu(s.gamma, P(s.F, "Y")), 3, 4) == std::vector<int>{1, 3, 9, 27, 81});
}

TEST_CASE("orbit table for the full-escape configuration") {
  Setup s;
  const FqPoly pi = P(s.F, "Y^2+1");
  const OrbitTable t = theorem31_table(s.gamma, pi, 4, 40, 1 << 22);
  REQUIRE(t.rows.size() == 40);
  CHECK(t.split.e == 2);
  CHECK(t.split.d == 1);
  CHECK(t.split.r == 1);
  CHECK(t.linear_bound_holds());
  CHECK(calibrate_kappa(t.split, t.p, t.rows, 20) == t.kappa);
  for (const auto& r : t.rows) CHECK(r.m <= r.bound);
  // Along n_k = floor(r p^k / e) = 1, 4, 13, 40 (k = 1..4) the orbit sizes are exactly d p^k.
  const std::vector<int> nk = lom_subsequence(t.split, 3, 4);
  REQUIRE(nk.size() == 4);
  std::uint64_t pk = 3;
  for (std::size_t k = 0; k < nk.size(); ++k, pk *= 3) CHECK(t.rows[static_cast<std::size_t>(nk[k] - 1)].m == pk);
  CHECK(t.rows[3].full_sphere);
  CHECK_FALSE(t.rows[4].full_sphere);
  CHECK(ceil_pow(3, 10, 1) == 27);
  CHECK(ceil_pow(3, 1, 2) == 1);
  CHECK(orbit_bound(t.split, 3, 1, 0) == 2);
}

TEST_CASE("stabilizer sizes match counting in a small ball") {
  // Projective classes of unit-det integral matrices fixing the height-h vertex:
  // with D = diag(Y^h, 1), Y^h D^-1 g D must have Cartan distance 0.
  for (int q : {3, 5}) {
    auto F = Field::make(static_cast<std::uint32_t>(q));
    for (int h = 0; h <= (q == 3 ? 1 : 0); ++h) {
      const int deg = h + 1;
      std::vector<FqPoly> polys;
      std::uint64_t count = 1;
      for (int i = 0; i < deg + 1; ++i) count *= static_cast<std::uint64_t>(q);
      for (std::uint64_t i = 0; i < count; ++i) polys.push_back(poly_from_index(F, i, deg + 1));
      FqPoly yh = FqPoly::constant(F, 1);
      for (int i = 0; i < h; ++i) yh = yh * P(F, "Y");
      std::uint64_t fixed = 0;
      for (const auto& a : polys)
        for (const auto& b : polys)
          for (const auto& c : polys)
            for (const auto& d : polys) {
              const PolyMat g{a, b, c, d};
              if (g.det().degree() != 0) continue;
              if (cartan_distance(PolyMat{a * yh, b, c * yh * yh, d * yh}) == 0) ++fixed;
            }
      CHECK(fixed / static_cast<std::uint64_t>(q - 1) == stabilizer_size(q, h));
    }
  }
  CHECK(stabilizer_size(3, 0) == 24);
  CHECK(stabilizer_size(3, 2) == 2 * 27);
}

TEST_CASE("model masses") {
  for (int q : {3, 5}) {
    double all = 0, even = 0, odd = 0;
    for (int h = 0; h < 80; ++h) {
      all += model_mass(q, h);
      even += model_mass(q, h, 0);
      odd += model_mass(q, h, 1);
      if (h % 2) CHECK(model_mass(q, h, 0) == 0.0);
    }
    CHECK(all == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(even == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(odd == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(model_tail(q, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(model_tail(q, 3) == doctest::Approx(1.0 - model_mass(q, 0) - model_mass(q, 1) - model_mass(q, 2)).epsilon(1e-12));
    CHECK(model_mass(q, 0) / model_mass(q, 1) == doctest::Approx(double(stabilizer_size(q, 1)) / double(stabilizer_size(q, 0))));
  }
  // q = 3: 1/24 against 1/18, 1/54, ...: mass at height 0 is exactly 1/3.
  CHECK(model_mass(3, 0) == doctest::Approx(1.0 / 3));
}

TEST_CASE("sector sphere heights: single parity, unit mass, and convergence to the model") {
  Setup s;
  const FqPoly Y = P(s.F, "Y");
  const SectorSpec sec{canonical_vertex(parse_polymat(s.F, "Y^2,Y+1;0,1"), Y)};
  const int ht0 = point_height(poly_identity(s.F), s.g_f);
  double prev = 1.0;
  for (int n : {4, 6, 8}) {
    const HeightHistogram h = sector_sphere_distribution(sec, Y, n, s.g_f, SectorMode::Enum, 0, 0);
    CHECK(h.total == sector_sphere_size(sec, Y, n));
    CHECK(total_mass(h) == Rational(1));  // psi = 1 integrates to 1 exactly
    const int parity = sphere_height_parity(ht0, Y, n);
    for (const auto& [k, c] : h.counts) CHECK(k % 2 == parity);
    const double tv = total_variation(h, 3, parity);
    CHECK(tv < prev);
    prev = tv;
    if (n == 8) {
      CHECK(static_cast<double>(h.mass(0).num()) / static_cast<double>(h.mass(0).den()) >= model_mass(3, 0, parity) - 0.1);
      CHECK(h.counts.at(1) == 648);
    }
  }
  CHECK(prev < 0.01);
  const HeightHistogram a = sector_sphere_distribution(sec, Y, 10, s.g_f, SectorMode::Sample, 500, 4);
  CHECK(a == sector_sphere_distribution(sec, Y, 10, s.g_f, SectorMode::Sample, 500, 4));
  CHECK(a.total == 500);
  CHECK_THROWS_AS(sector_sphere_distribution(sec, Y, 1, s.g_f, SectorMode::Enum, 0, 0), Error);
}

TEST_CASE("cyclic windows") {
  auto F = Field::make(3);
  const std::vector<FqPoly> a{P(F, "Y"), P(F, "Y+1"), P(F, "Y^2")};
  CHECK(cyclic_window(a, a) == 3);
  CHECK(cyclic_equivalent(a, {P(F, "Y+1"), P(F, "Y^2"), P(F, "Y")}));
  CHECK_FALSE(cyclic_equivalent(a, {P(F, "Y+1"), P(F, "Y"), P(F, "Y^2")}));
  CHECK(cyclic_window(a, {P(F, "Y^2"), P(F, "Y")}) == 2);
  CHECK(cyclic_window(a, {P(F, "Y+2")}) == 0);
  // Scaling by c, 1/c alternately keeps the class: [2Y, 2Y] ~ [Y, Y] since 2 = 1/2.
  CHECK(cyclic_equivalent({P(F, "Y"), P(F, "Y")}, {P(F, "2*Y"), P(F, "2*Y")}));
}

TEST_CASE("close search: trivial full match and witnesses in disjoint sub-sectors") {
  Setup s;
  const FqPoly Y = P(s.F, "Y");
  const PeriodicOrbit root_orbit = analyze_periodic(poly_identity(s.F), s.lox);
  const CloseSearchReport r0 = lemma_close_search(SectorSpec{root_vertex(Y)}, root_orbit, Y, 0, s.lox);
  CHECK(r0.full_match);
  CHECK(r0.window == r0.target_length);
  REQUIRE(r0.witness);
  CHECK(*r0.witness == root_vertex(Y));

  const auto kids = hecke_neighbors(root_vertex(Y), Y);
  const PeriodicOrbit t1 = analyze_periodic(ray_point(s.inf, Y, 2), s.lox);
  const PeriodicOrbit t2 = analyze_periodic(ray_point(s.inf, Y, 5), s.lox);
  REQUIRE_FALSE(cyclic_equivalent(t1.cf.period, t2.cf.period));
  const CloseSearchReport a = lemma_close_search(SectorSpec{kids[0]}, t1, Y, 6, s.lox);
  const CloseSearchReport b = lemma_close_search(SectorSpec{kids[1]}, t2, Y, 6, s.lox);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK_FALSE(*a.witness == *b.witness);
  CHECK(tree_distance(kids[0], *a.witness, Y) == 5);
  CHECK(tree_distance(kids[1], *b.witness, Y) == 5);
  CHECK(a.window >= 1);
  CHECK(b.window >= 1);
}

TEST_CASE("close search window series on the depth-2 sector (regression)") {
  // W(n) is not monotone in n: letters like Y+1 appear on sphere points whose
  // periods never contain the target's Y, 2Y pattern at some radii.
  Setup s;
  const FqPoly Y = P(s.F, "Y");
  const SectorSpec sec{canonical_vertex(parse_polymat(s.F, "Y^2,Y+1;0,1"), Y)};
  const PeriodicOrbit target = analyze_periodic(ray_point(s.inf, Y, 2), s.lox);
  CHECK(target.cf.period.size() == 4);
  std::vector<int> w;
  std::vector<bool> full;
  for (int n = 2; n <= 8; ++n) {
    const auto r = lemma_close_search(sec, target, Y, n, s.lox);
    w.push_back(r.window);
    full.push_back(r.full_match);
  }
  CHECK(w == std::vector<int>{0, 4, 0, 1, 1, 3, 2});
  CHECK(full == std::vector<bool>{false, true, false, false, false, false, false});
}

TEST_CASE("mass below N along the subsequence") {
  Setup s;
  const FqPoly pi = P(s.F, "Y^2+1");
  const TrendReport t = conjecture2_scan(s.lox, s.inf, pi, {1, 4, 13, 40}, 10);
  REQUIRE(t.rows.size() == 4);
  CHECK(t.rows[2].mass_below == Rational(19, 54));
  CHECK(t.rows[3].mass_below == Rational(19, 162));
  CHECK(t.sup_scaled == Rational(380, 81));
  CHECK(t.sup_scaled <= Rational(10 + 1 + 1));
  // Other rational ends: the mass below N also shrinks along the subsequence.
  for (const char* xs : {"0/1", "1/Y", "Y+1/Y^2+2", "2/Y+1", "Y^2/Y^3+Y+1"}) {
    const TrendReport u = conjecture2_scan(s.lox, parse_end(s.F, xs), pi, {4, 13, 40}, 10);
    CHECK(u.rows.back().mass_below < u.rows.front().mass_below);
    CHECK(u.rows.back().mass_below <= Rational(1, 4));
  }
}
