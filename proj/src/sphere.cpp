#include "ffdyn/sphere.hpp"

#include <unordered_map>
#include <unordered_set>

#include "ffdyn/error.hpp"
#include "ffdyn/nuadic.hpp"

namespace ffdyn {

namespace {

std::uint64_t residue_count(const FqPoly& pi) {
  std::uint64_t q = 1;
  for (int i = 0; i < pi.degree(); ++i) q *= pi.F().q();
  return q;
}

int capped_valuation(const FqPoly& x, const FqPoly& pi, int cap) {
  if (x.is_zero()) return cap;
  return std::min(valuation(x, pi), cap);
}

}  // namespace

std::uint64_t sphere_size(const FqPoly& pi, int n) {
  if (n == 0) return 1;
  const std::uint64_t qn = residue_count(pi);
  std::uint64_t s = qn + 1;
  for (int i = 1; i < n; ++i) s *= qn;
  return s;
}

SpherePoint canonical_point(const FqPoly& a, const FqPoly& b, const FqPoly& pi, int n) {
  const FqPoly N = pow(pi, static_cast<unsigned>(n));
  const FqPoly ar = a % N, br = b % N;
  const FieldPtr& F = pi.field();
  if (!(ar % pi).is_zero()) return {n, FqPoly::constant(F, 1), mulmod(br, invmod(ar, N), N)};
  if ((br % pi).is_zero()) fail(ErrorKind::DomainError, "vector is not primitive modulo pi");
  return {n, mulmod(ar, invmod(br, N), N), FqPoly::constant(F, 1)};
}

std::vector<SpherePoint> sphere_points(const FqPoly& pi, int n) {
  const FieldPtr& F = pi.field();
  std::vector<SpherePoint> out;
  const FqPoly one = FqPoly::constant(F, 1);
  std::uint64_t qn = 1;
  for (int i = 0; i < n * pi.degree(); ++i) qn *= F->q();
  for (std::uint64_t idx = 0; idx < qn; ++idx) out.push_back({n, one, poly_from_index(F, idx, n * pi.degree())});
  const std::uint64_t qm = qn / residue_count(pi);
  for (std::uint64_t idx = 0; idx < qm; ++idx)
    out.push_back({n, pi * poly_from_index(F, idx, (n - 1) * pi.degree()), one});
  return out;
}

SpherePoint gamma_action_on_sphere(const PGL2Elem& gamma, const SpherePoint& x, const FqPoly& pi) {
  if (!gamma.in_gamma_infty()) fail(ErrorKind::NotInGammaInfty, to_string(gamma) + " is not in PGL_2(F_q[Y])");
  const PolyMat& g = gamma.mat();
  return canonical_point(g.a * x.a + g.b * x.b, g.c * x.a + g.d * x.b, pi, x.n);
}

int orbit_size(const PGL2Elem& gamma, const SpherePoint& x, const FqPoly& pi) {
  int k = 1;
  for (SpherePoint y = gamma_action_on_sphere(gamma, x, pi); !(y == x); y = gamma_action_on_sphere(gamma, y, pi)) ++k;
  return k;
}

namespace {

struct Lifter {
  const FqPoly& pi;
  FqPoly full;  // pi^n_max
  int n_max;
  std::vector<FqPoly> pis;  // pi^k
  std::vector<FqPoly> residues;
  SphereOrbitStats* stats;

  int index_of(const FqPoly& c) const {
    std::uint64_t idx = 0, pw = 1;
    const std::uint32_t q = pi.F().q();
    for (int i = 0; i < pi.degree(); ++i) {
      idx += c.coeff(i) * pw;
      pw *= q;
    }
    return static_cast<int>(idx);
  }

  void record(int n, std::uint64_t size) {
    auto i = static_cast<std::size_t>(n - 1);
    stats->max_orbit[i] = std::max(stats->max_orbit[i], size);
    stats->orbit_count[i] += 1;
    stats->points[i] += size;
  }

  // Representative r = (1, x) (type_a) or (x, 1) at radius n-1, orbit size s,
  // g = gamma^s mod pi^n_max fixing it. Explore radius n.
  void lift(bool type_a, const FqPoly& x, std::uint64_t s, const PolyMat& g, int n) {
    const FqPoly& Nn = pis[static_cast<std::size_t>(n)];
    FqPoly A, B, D;
    if (type_a) {
      A = (g.a + g.b * x) % Nn;
      B = (g.c + g.d * x - A * x) % Nn;
      D = (g.d - g.b * x) % pi;
    } else {
      A = (g.c * x + g.d) % Nn;
      B = (g.a * x + g.b - A * x) % Nn;
      D = (g.a - g.c * x) % pi;
    }
    const FqPoly& low = pis[static_cast<std::size_t>(n - 1)];
    auto [beta0, rem] = divrem(B, low);
    if (!rem.is_zero()) fail(ErrorKind::DomainError, "orbit lifting lost the fixed representative");
    const FqPoly Ainv = invmod(A % pi, pi);
    const FqPoly alpha = mulmod(D, Ainv, pi), beta = mulmod(beta0 % pi, Ainv, pi);
    const std::size_t qn = residues.size();
    std::vector<int> image(qn);
    for (std::size_t c = 0; c < qn; ++c) image[c] = index_of((mulmod(alpha, residues[c], pi) + beta) % pi);
    std::vector<char> seen(qn, 0);
    for (std::size_t c = 0; c < qn; ++c) {
      if (seen[c]) continue;
      std::uint64_t j = 0;
      for (std::size_t y = c; !seen[y]; y = static_cast<std::size_t>(image[y])) {
        seen[y] = 1;
        ++j;
      }
      record(n, s * j);
      if (n < n_max) {
        const FqPoly xc = x + residues[c] * low;
        PolyMat gj = g;
        for (std::uint64_t t = 1; t < j; ++t) gj = mulmod(gj, g, full);
        lift(type_a, xc, s * j, gj, n + 1);
      }
    }
  }
};

}  // namespace

SphereOrbitStats sphere_orbit_stats(const PGL2Elem& gamma, const FqPoly& pi, int n_max, std::uint64_t budget) {
  if (!gamma.in_gamma_infty()) fail(ErrorKind::NotInGammaInfty, to_string(gamma) + " is not in PGL_2(F_q[Y])");
  if (n_max < 1) fail(ErrorKind::OutOfRange, "radius must be positive");
  if (sphere_size(pi, n_max) > budget)
    fail(ErrorKind::BudgetExceeded, "sphere of radius " + std::to_string(n_max) + " exceeds the point budget");
  SphereOrbitStats stats;
  stats.max_orbit.assign(static_cast<std::size_t>(n_max), 0);
  stats.orbit_count.assign(static_cast<std::size_t>(n_max), 0);
  stats.points.assign(static_cast<std::size_t>(n_max), 0);
  Lifter L{pi, pow(pi, static_cast<unsigned>(n_max)), n_max, {}, {}, &stats};
  for (int k = 0; k <= n_max; ++k) L.pis.push_back(pow(pi, static_cast<unsigned>(k)));
  const std::uint64_t qn = residue_count(pi);
  for (std::uint64_t idx = 0; idx < qn; ++idx) L.residues.push_back(poly_from_index(pi.field(), idx, pi.degree()));
  const PolyMat g = mod(gamma.mat(), L.full);
  // Radius 1: orbits on P^1 of the residue field, found directly.
  std::unordered_set<SpherePoint, SpherePointHash> seen;
  for (const SpherePoint& p : sphere_points(pi, 1)) {
    if (seen.count(p)) continue;
    std::uint64_t s = 0;
    SpherePoint y = p;
    do {
      seen.insert(y);
      ++s;
      y = gamma_action_on_sphere(gamma, y, pi);
    } while (!(y == p));
    L.record(1, s);
    if (n_max > 1) {
      PolyMat gs = g;
      for (std::uint64_t t = 1; t < s; ++t) gs = mulmod(gs, g, L.full);
      const bool type_a = p.a.is_one();
      L.lift(type_a, type_a ? p.b : p.a, s, gs, 2);
    }
  }
  return stats;
}

std::vector<std::uint64_t> max_orbit_sizes(const PGL2Elem& gamma, const FqPoly& pi, int n_max, std::uint64_t budget) {
  return sphere_orbit_stats(gamma, pi, n_max, budget).max_orbit;
}

std::vector<std::uint64_t> max_orbit_sizes_naive(const PGL2Elem& gamma, const FqPoly& pi, int n_max) {
  std::vector<std::uint64_t> out;
  for (int n = 1; n <= n_max; ++n) {
    std::unordered_set<SpherePoint, SpherePointHash> seen;
    std::uint64_t best = 0;
    for (const SpherePoint& p : sphere_points(pi, n)) {
      if (seen.count(p)) continue;
      std::uint64_t s = 0;
      SpherePoint y = p;
      do {
        seen.insert(y);
        ++s;
        y = gamma_action_on_sphere(gamma, y, pi);
      } while (!(y == p));
      best = std::max(best, s);
    }
    out.push_back(best);
  }
  return out;
}

std::vector<std::uint64_t> ray_orbit_sizes(const PGL2Elem& gamma, const FqPoly& pi, int n_max) {
  if (!gamma.in_gamma_infty()) fail(ErrorKind::NotInGammaInfty, to_string(gamma) + " is not in PGL_2(F_q[Y])");
  const FqPoly N = pow(pi, static_cast<unsigned>(n_max));
  const PolyMat g = mod(gamma.mat(), N);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_max), 0);
  PolyMat gk = g;
  int reached = 0;
  const std::uint64_t cap = 10000000;
  for (std::uint64_t k = 1; reached < n_max; ++k) {
    if (k > cap) fail(ErrorKind::BudgetExceeded, "ray orbit longer than the step cap");
    const int v = capped_valuation(gk.c, pi, n_max);
    for (int n = reached + 1; n <= v; ++n) out[static_cast<std::size_t>(n - 1)] = k;
    reached = std::max(reached, v);
    gk = mulmod(gk, g, N);
  }
  return out;
}

int unit_depth(const FqPoly& lambda, const FqPoly& pi, int cap) {
  const FqPoly a = lambda % pi;
  if (a.is_zero()) fail(ErrorKind::DomainError, "lambda is not a unit at pi");
  const FqPoly N = pow(pi, static_cast<unsigned>(cap));
  return capped_valuation((lambda - teichmuller_lift(a, pi, cap)) % N, pi, cap);
}

std::vector<std::uint64_t> unit_orbit_lengths(const FqPoly& lambda, const FqPoly& pi, int n_max) {
  const FqPoly a = lambda % pi;
  if (a.is_zero()) fail(ErrorKind::DomainError, "lambda is not a unit at pi");
  const FqPoly N = pow(pi, static_cast<unsigned>(n_max));
  const FqPoly u = mulmod(lambda, invmod(teichmuller_lift(a, pi, n_max), N), N);
  const FqPoly one = FqPoly::constant(pi.field(), 1);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n_max), 0);
  int reached = 0;
  FqPoly x = u;
  for (std::uint64_t k = 1; reached < n_max; ++k) {
    if (k > 100000000ull) fail(ErrorKind::BudgetExceeded, "unit orbit longer than the step cap");
    const int v = capped_valuation((x - one) % N, pi, n_max);
    for (int n = reached + 1; n <= v; ++n) out[static_cast<std::size_t>(n - 1)] = k;
    reached = std::max(reached, v);
    x = mulmod(x, u, N);
  }
  return out;
}

std::uint64_t unit_orbit_length(const FqPoly& lambda, const FqPoly& pi, int n) {
  const int r = unit_depth(lambda, pi, n);
  if (n <= r) fail(ErrorKind::OutOfRange, "radius " + std::to_string(n) + " is not above the unit depth");
  const FqPoly N = pow(pi, static_cast<unsigned>(n));
  const FqPoly lam = lambda % N, w = teichmuller_lift(lambda % pi, pi, n);
  FqPoly x = lam, y = w;
  for (std::uint64_t k = 1;; ++k) {
    if (x == y) return k;
    x = mulmod(x, lam, N);
    y = mulmod(y, w, N);
  }
}

}  // namespace ffdyn
