#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffdyn/pgl2.hpp"
#include "ffdyn/sphere.hpp"

namespace ffdyn {

// Homothety class of an F_q[Y]-lattice in K^2 in the pi-Hecke tree of the
// standard lattice. Canonical basis: column Hermite form [[a, b], [0, d]] with
// a, d monic, deg b < deg a, and no common factor pi; det = pi^depth.
struct HeckeVertex {
  PolyMat hnf;
  int depth = 0;
  friend bool operator==(const HeckeVertex& x, const HeckeVertex& y) { return x.hnf == y.hnf; }
};

struct HeckeVertexHash {
  std::size_t operator()(const HeckeVertex& v) const { return v.hnf.a.hash() * 31 + v.hnf.b.hash() * 7 + v.hnf.d.hash(); }
};

// Class of the lattice spanned by the columns of m.
HeckeVertex canonical_vertex(const PolyMat& m, const FqPoly& pi);
HeckeVertex root_vertex(const FqPoly& pi);
std::vector<HeckeVertex> hecke_neighbors(const HeckeVertex& v, const FqPoly& pi);
int tree_distance(const HeckeVertex& x, const HeckeVertex& y, const FqPoly& pi);
bool contains_vector(const HeckeVertex& v, const FqPoly& x, const FqPoly& y);

// Depth-n vertices correspond to points of P^1(F_q[Y]/(pi^n)).
SpherePoint vertex_to_sphere_point(const HeckeVertex& v, const FqPoly& pi);
HeckeVertex sphere_point_to_vertex(const SpherePoint& p, const FqPoly& pi);

// A rational end xi = [u : v] of P^1(K), with v = 0 meaning infinity; the
// conjugator gamma in PGL_2(F_q[Y]) satisfies gamma(inf) = xi.
struct RationalEnd {
  FqPoly u, v;
  PolyMat conjugator() const;
};
RationalEnd parse_end(const FieldPtr& F, const std::string& s);  // "inf" or "u/v"
std::string to_string(const RationalEnd& xi);

// Vertices h_n^-1 [R^2] of the ray toward xi: gamma a^n gamma^-1 [R^2] with a = diag(1, pi).
HeckeVertex ray_vertex(const RationalEnd& xi, const FqPoly& pi, int n);
// Polynomial representative of h_n = gamma a^-n gamma^-1 (class in PGL_2(K)).
PolyMat ray_conjugator(const RationalEnd& xi, const FqPoly& pi, int n);

// Vertices at depth n whose geodesic to the root passes through x.
struct SectorSpec {
  HeckeVertex x;
};
std::uint64_t sector_sphere_size(const SectorSpec& s, const FqPoly& pi, int n);
std::vector<HeckeVertex> sector_sphere_enum(const SectorSpec& s, const FqPoly& pi, int n, std::uint64_t budget);
// Uniform sample with replacement; deterministic in the seed.
std::vector<HeckeVertex> sector_sphere_sample(const SectorSpec& s, const FqPoly& pi, int n, std::uint64_t count,
                                              std::uint64_t seed);
std::vector<HeckeVertex> children(const HeckeVertex& v, const FqPoly& pi);

std::string vertex_json(const HeckeVertex& v);

}  // namespace ffdyn
