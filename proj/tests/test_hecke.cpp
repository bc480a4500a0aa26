#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ffdyn/error.hpp"
#include "ffdyn/hecke.hpp"
#include "support.hpp"

using namespace ffdyn;
using ffdyn::testing::P;

namespace {

HeckeVertex act(const PolyMat& g, const HeckeVertex& v, const FqPoly& pi) { return canonical_vertex(g * v.hnf, pi); }

PolyMat random_unimodular(std::mt19937_64& rng, const FieldPtr& F) {
  PolyMat g = poly_identity(F);
  const PolyMat w{FqPoly(F), FqPoly::constant(F, 1), FqPoly::constant(F, 1), FqPoly(F)};
  for (int i = 0; i < 3; ++i)
    g = g * PolyMat{FqPoly::constant(F, 1), testing::random_poly(rng, F, 2), FqPoly(F), FqPoly::constant(F, 1)} * w;
  return g;
}

// Breadth-first ball of the given radius around the root.
std::unordered_map<HeckeVertex, int, HeckeVertexHash> ball(const FqPoly& pi, int radius) {
  std::unordered_map<HeckeVertex, int, HeckeVertexHash> dist{{root_vertex(pi), 0}};
  std::deque<HeckeVertex> queue{root_vertex(pi)};
  while (!queue.empty()) {
    const HeckeVertex v = queue.front();
    queue.pop_front();
    const int d = dist[v];
    if (d == radius) continue;
    for (const auto& w : hecke_neighbors(v, pi))
      if (dist.emplace(w, d + 1).second) queue.push_back(w);
  }
  return dist;
}

}  // namespace

TEST_CASE("neighbors of the standard vertex") {
  auto F = Field::make(3);
  const FqPoly Y = P(F, "Y");
  const auto nb = hecke_neighbors(root_vertex(Y), Y);
  CHECK(nb.size() == 4);
  std::set<std::string> got, expect;
  for (const auto& v : nb) got.insert(to_string(v.hnf));
  expect.insert(to_string(canonical_vertex(diag(Y, FqPoly::constant(F, 1)), Y).hnf));
  for (FqElem c = 0; c < 3; ++c)
    expect.insert(to_string(canonical_vertex(PolyMat{FqPoly::constant(F, 1), FqPoly(F), FqPoly::constant(F, c), Y}, Y).hnf));
  CHECK(got == expect);
  CHECK(hecke_neighbors(root_vertex(P(F, "Y^2+1")), P(F, "Y^2+1")).size() == 10);
  for (const auto& v : nb) CHECK(v.depth == 1);
}

TEST_CASE("neighbor relation is symmetric and has q_nu + 1 distinct classes") {
  auto F = Field::make(3);
  for (const char* ps : {"Y", "Y^2+1"}) {
    const FqPoly pi = P(F, ps);
    const std::size_t deg = pi.degree() == 1 ? 4 : 10;
    for (const auto& [v, d] : ball(pi, pi.degree() == 1 ? 3 : 2)) {
      const auto nb = hecke_neighbors(v, pi);
      CHECK(nb.size() == deg);
      CHECK(std::unordered_set<HeckeVertex, HeckeVertexHash>(nb.begin(), nb.end()).size() == deg);
      for (const auto& w : nb) {
        const auto back = hecke_neighbors(w, pi);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
        CHECK(tree_distance(v, w, pi) == 1);
      }
    }
  }
}

TEST_CASE("canonicalization is idempotent and independent of the basis") {
  std::mt19937_64 rng(6);
  auto F = Field::make(3);
  const FqPoly pi = P(F, "Y");
  for (int i = 0; i < 50; ++i) {
    // det = pi^k, then scrambled by a unimodular change of coordinates.
    const int k = static_cast<int>(rng() % 4);
    FqPoly pk = FqPoly::constant(F, 1);
    for (int j = 0; j < k; ++j) pk = pk * pi;
    const PolyMat m = random_unimodular(rng, F) * PolyMat{pk, testing::random_poly(rng, F, 2), FqPoly(F), FqPoly::constant(F, 1)};
    const HeckeVertex v = canonical_vertex(m, pi);
    CHECK(canonical_vertex(v.hnf, pi) == v);
    CHECK(canonical_vertex(m * random_unimodular(rng, F), pi) == v);  // column recombination
    CHECK(canonical_vertex(PolyMat{m.a * pi, m.b * pi, m.c * pi, m.d * pi}, pi) == v);  // homothety
    CHECK(v.hnf.c.is_zero());
    CHECK(v.hnf.a.is_monic());
    CHECK(v.hnf.d.is_monic());
    CHECK(v.hnf.b.degree() < v.hnf.a.degree());
  }
  try {
    (void)canonical_vertex(diag(P(F, "Y+1"), FqPoly::constant(F, 1)), pi);
    FAIL("det with a foreign factor accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
}

TEST_CASE("tree axioms up to radius 4") {
  auto F = Field::make(3);
  const FqPoly pi = P(F, "Y");
  const auto dist = ball(pi, 4);
  CHECK(dist.size() == 1 + 4 + 12 + 36 + 108);  // no cycles: the ball has tree size
  for (const auto& [v, d] : dist) {
    CHECK(tree_distance(root_vertex(pi), v, pi) == d);
    CHECK(v.depth == d);
    for (const auto& w : hecke_neighbors(v, pi)) {
      auto it = dist.find(w);
      if (it != dist.end()) CHECK(std::abs(it->second - d) == 1);
    }
  }
  std::mt19937_64 rng(2);
  std::vector<HeckeVertex> vs;
  for (const auto& [v, d] : dist) vs.push_back(v);
  for (int i = 0; i < 200; ++i) {
    const auto& x = vs[rng() % vs.size()];
    const auto& y = vs[rng() % vs.size()];
    const auto& z = vs[rng() % vs.size()];
    CHECK(tree_distance(x, y, pi) == tree_distance(y, x, pi));
    CHECK(tree_distance(x, z, pi) <= tree_distance(x, y, pi) + tree_distance(y, z, pi));
    CHECK((tree_distance(x, y, pi) == 0) == (x == y));
  }
}

TEST_CASE("depth-n vertices and sphere points correspond") {
  auto F = Field::make(3);
  for (const char* ps : {"Y", "Y^2+1"}) {
    const FqPoly pi = P(F, ps);
    for (int n = 1; n <= (pi.degree() == 1 ? 4 : 2); ++n)
      for (const auto& x : sphere_points(pi, n)) {
        const HeckeVertex v = sphere_point_to_vertex(x, pi);
        CHECK(v.depth == n);
        CHECK(vertex_to_sphere_point(v, pi) == x);
      }
  }
}

TEST_CASE("rays toward rational ends are geodesic") {
  auto F = Field::make(3);
  for (const char* ps : {"Y", "Y^2+1"}) {
    const FqPoly pi = P(F, ps);
    for (const char* xs : {"inf", "0/1", "1/Y", "Y+1/Y^2+2"}) {
      const RationalEnd xi = parse_end(F, xs);
      CHECK(ray_vertex(xi, pi, 0) == root_vertex(pi));
      for (int n = 0; n < 20; ++n) {
        const HeckeVertex a = ray_vertex(xi, pi, n), b = ray_vertex(xi, pi, n + 1);
        CHECK(tree_distance(a, b, pi) == 1);
        CHECK(b.depth == n + 1);  // no depth offset for ends over F_q[Y]
        CHECK(canonical_vertex(ray_conjugator(xi, pi, n).adjugate(), pi) == a);
      }
      CHECK(tree_distance(ray_vertex(xi, pi, 3), ray_vertex(xi, pi, 17), pi) == 14);
    }
  }
  const RationalEnd inf = parse_end(F, "inf");
  CHECK(ray_conjugator(inf, P(F, "Y"), 2) == diag(P(F, "Y^2"), FqPoly::constant(F, 1)));
  CHECK(to_string(parse_end(F, "Y/Y+1")) == "Y/Y+1");
  CHECK(to_string(parse_end(F, "Y^2+Y/2*Y")) == "2*Y+2/1");  // reduced to coprime, v monic
  CHECK_THROWS_AS(parse_end(F, "Y/0"), Error);
}

TEST_CASE("the ray toward infinity is the path fixed by the upper triangular group") {
  auto F = Field::make(3);
  const FqElem gen = 2;  // generates F_3^x
  for (const char* ps : {"Y", "Y^2+1"}) {
    const FqPoly pi = P(F, ps);
    const std::vector<PolyMat> borel{
        PolyMat{FqPoly::constant(F, 1), FqPoly::constant(F, 1), FqPoly(F), FqPoly::constant(F, 1)},
        PolyMat{FqPoly::constant(F, 1), P(F, "Y"), FqPoly(F), FqPoly::constant(F, 1)},
        diag(FqPoly::constant(F, gen), FqPoly::constant(F, 1))};
    HeckeVertex v = root_vertex(pi);
    const RationalEnd inf = parse_end(F, "inf");
    for (int n = 1; n <= 10; ++n) {
      std::vector<HeckeVertex> fixed;
      for (const auto& c : children(v, pi)) {
        bool all = true;
        for (const auto& b : borel) all = all && act(b, c, pi) == c;
        if (all) fixed.push_back(c);
      }
      REQUIRE(fixed.size() == 1);
      v = fixed.front();
      CHECK(v == ray_vertex(inf, pi, n));
    }
  }
}

TEST_CASE("sector spheres") {
  auto F = Field::make(3);
  const FqPoly Y = P(F, "Y");
  const SectorSpec root{root_vertex(Y)};
  const auto s1 = sector_sphere_enum(root, Y, 1, 100);
  const auto nb = hecke_neighbors(root_vertex(Y), Y);
  CHECK(std::set<std::string>([&] {
          std::set<std::string> s;
          for (const auto& v : s1) s.insert(to_string(v.hnf));
          return s;
        }()) == [&] {
          std::set<std::string> s;
          for (const auto& v : nb) s.insert(to_string(v.hnf));
          return s;
        }());
  const SectorSpec deep{canonical_vertex(parse_polymat(F, "Y^2,Y+1;0,1"), Y)};
  REQUIRE(deep.x.depth == 2);
  const auto s5 = sector_sphere_enum(deep, Y, 5, 1000);
  CHECK(s5.size() == 27);
  CHECK(sector_sphere_size(deep, Y, 5) == 27);
  CHECK(std::unordered_set<HeckeVertex, HeckeVertexHash>(s5.begin(), s5.end()).size() == 27);
  for (const auto& v : s5) {
    CHECK(tree_distance(root.x, v, Y) == 5);
    CHECK(tree_distance(deep.x, v, Y) == 3);  // the geodesic to the root runs through the sector vertex
  }
  CHECK(sector_sphere_enum(deep, Y, 1, 1000).empty());
  CHECK(sector_sphere_size(deep, Y, 1) == 0);
  CHECK(sector_sphere_enum(deep, Y, 2, 10) == std::vector<HeckeVertex>{deep.x});
  try {
    (void)sector_sphere_enum(deep, Y, 12, 1000);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  const FqPoly pi2 = P(F, "Y^2+1");
  CHECK(sector_sphere_enum(SectorSpec{root_vertex(pi2)}, pi2, 2, 1000).size() == 90);
}

TEST_CASE("sector sampling is deterministic, valid and covers the sphere") {
  auto F = Field::make(3);
  const FqPoly Y = P(F, "Y");
  const SectorSpec deep{canonical_vertex(parse_polymat(F, "Y^2,Y+1;0,1"), Y)};
  const auto a = sector_sphere_sample(deep, Y, 5, 200, 9), b = sector_sphere_sample(deep, Y, 5, 200, 9);
  CHECK(a == b);
  CHECK_FALSE(a == sector_sphere_sample(deep, Y, 5, 200, 10));
  for (const auto& v : a) {
    CHECK(tree_distance(deep.x, v, Y) == 3);
    CHECK(v.depth == 5);
  }
  // Sweep seeds with |S| draws each; the union should cover nearly everything.
  const auto sphere = sector_sphere_enum(deep, Y, 5, 1000);
  std::unordered_set<HeckeVertex, HeckeVertexHash> hit;
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    for (const auto& v : sector_sphere_sample(deep, Y, 5, sphere.size(), seed)) hit.insert(v);
  CHECK(hit.size() * 100 >= sphere.size() * 95);
  // Uniformity at the root: each of the 4 first steps about a quarter of 4000 draws.
  std::map<std::string, int> first;
  const SectorSpec root{root_vertex(Y)};
  for (const auto& v : sector_sphere_sample(root, Y, 3, 4000, 3)) {
    for (const auto& w : hecke_neighbors(root.x, Y))
      if (tree_distance(w, v, Y) == 2) ++first[to_string(w.hnf)];
  }
  CHECK(first.size() == 4);
  for (const auto& [k, c] : first) CHECK(std::abs(c - 1000) < 150);
  CHECK(vertex_json(deep.x) == "{\"hnf\":\"Y^2,Y+1;0,1\",\"depth\":2}");
}
