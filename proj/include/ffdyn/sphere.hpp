#pragma once

#include <cstdint>
#include <vector>

#include "ffdyn/pgl2.hpp"
#include "ffdyn/poly.hpp"

namespace ffdyn {

// Point [a : b] of P^1(F_q[Y]/(pi^n)), the radius-n sphere of the Hecke tree
// around the standard vertex. Canonical: a = 1, or b = 1 with pi | a.
struct SpherePoint {
  int n = 0;
  FqPoly a, b;
  friend bool operator==(const SpherePoint& x, const SpherePoint& y) { return x.n == y.n && x.a == y.a && x.b == y.b; }
};

struct SpherePointHash {
  std::size_t operator()(const SpherePoint& p) const { return p.a.hash() * 1000003u ^ p.b.hash() ^ static_cast<std::size_t>(p.n); }
};

// (q_nu + 1) q_nu^(n-1) for n >= 1.
std::uint64_t sphere_size(const FqPoly& pi, int n);
SpherePoint canonical_point(const FqPoly& a, const FqPoly& b, const FqPoly& pi, int n);
std::vector<SpherePoint> sphere_points(const FqPoly& pi, int n);

// Throws NotInGammaInfty unless gamma lies in PGL_2(F_q[Y]).
SpherePoint gamma_action_on_sphere(const PGL2Elem& gamma, const SpherePoint& x, const FqPoly& pi);
int orbit_size(const PGL2Elem& gamma, const SpherePoint& x, const FqPoly& pi);

// Orbit statistics of every sphere of radius 1..n_max, by lifting orbits
// level by level: an orbit of size s at radius n-1 is fixed pointwise-setwise
// by gamma^s, which acts on the q_nu children of a representative through an
// affine map of the residue field. Throws BudgetExceeded when the radius-n_max
// sphere has more than budget points.
struct SphereOrbitStats {
  std::vector<std::uint64_t> max_orbit;    // index n-1
  std::vector<std::uint64_t> orbit_count;  // number of orbits
  std::vector<std::uint64_t> points;       // sum of orbit sizes (= sphere size)
};
SphereOrbitStats sphere_orbit_stats(const PGL2Elem& gamma, const FqPoly& pi, int n_max, std::uint64_t budget);
std::vector<std::uint64_t> max_orbit_sizes(const PGL2Elem& gamma, const FqPoly& pi, int n_max, std::uint64_t budget);
// Reference enumeration visiting every point; for small spheres only.
std::vector<std::uint64_t> max_orbit_sizes_naive(const PGL2Elem& gamma, const FqPoly& pi, int n_max);

// Orbit size of the ray point [1 : 0] at radius n, for n = 1..n_max.
std::vector<std::uint64_t> ray_orbit_sizes(const PGL2Elem& gamma, const FqPoly& pi, int n_max);

// Least k >= 1 with lambda^k = a^k mod pi^n, where a is the multiplicative
// lift of lambda mod pi. OutOfRange unless n > r = v_pi(lambda - a).
std::uint64_t unit_orbit_length(const FqPoly& lambda, const FqPoly& pi, int n);
// The same for every n in 1..n_max in one pass (entries with n <= r included).
std::vector<std::uint64_t> unit_orbit_lengths(const FqPoly& lambda, const FqPoly& pi, int n_max);
int unit_depth(const FqPoly& lambda, const FqPoly& pi, int cap);

}  // namespace ffdyn
