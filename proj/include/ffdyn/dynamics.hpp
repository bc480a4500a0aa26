#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffdyn/cf.hpp"
#include "ffdyn/hecke.hpp"
#include "ffdyn/height.hpp"
#include "ffdyn/pgl2.hpp"
#include "ffdyn/rational.hpp"

namespace ffdyn {

// Occupation counts of heights along a closed geodesic with uniform time;
// total equals the period.
struct HeightHistogram {
  std::map<int, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(int h, std::uint64_t n = 1) {
    counts[h] += n;
    total += n;
  }
  Rational mass_below(int N) const;    // height < N
  Rational mass_at_least(int N) const;  // height >= N
  Rational mass(int h) const;
  int max_height() const { return counts.empty() ? 0 : counts.rbegin()->first; }
  friend bool operator==(const HeightHistogram&, const HeightHistogram&) = default;
};

std::string to_json(const HeightHistogram& h);

// Histogram coded by partial quotients: a quotient of degree d accounts for
// the excursion 0, 1, ..., d, ..., 1 (2d steps).
HeightHistogram histogram_from_quotients(const std::vector<FqPoly>& quotients);

enum class OrbitPath { Fast, Walk, Both };

struct OrbitOptions {
  OrbitPath path = OrbitPath::Fast;
  int k_max = 1 << 20;
  int rel_prec = 64;  // starting precision; doubled on PrecisionExhausted
  int max_prec = 1 << 14;
};

// Closed A-orbit of x = Gamma_inf h g_f, where g_f spans the axis of gamma0.
struct PeriodicOrbit {
  PolyMat h;
  ConjugatePeriod conj;      // delta = h gamma0^k h^-1 in PGL_2(F_q[Y])
  int ell_delta = 0;        // translation length of delta
  int lambda = 0;           // primitive period of the closed geodesic
  QuadElem f;               // h f+, fixed by delta
  CFExpansion cf;           // expansion of f
  int start_height = 0;     // height of x itself
  std::vector<int> profile; // walk heights over one primitive period (walk paths only)
  HeightHistogram histogram;
};

// Throws PeriodSearchExhausted, PrecisionExhausted, or a consistency
// DomainError when the two paths disagree under OrbitPath::Both.
PeriodicOrbit analyze_periodic(const PolyMat& h, const LoxodromicData& lox, const OrbitOptions& opt = {});

// Height of Gamma_inf h g_f, retrying with more precision as needed.
int point_height(const PolyMat& h, const QuadMat& g_f, int rel_prec = 64);

// Ray x_n = Gamma_inf h_n g_f with h_n the adjugate of the HNF of the depth-n ray vertex toward xi.
PolyMat ray_point(const RationalEnd& xi, const FqPoly& pi, int n);

struct EscapeRow {
  int n = 0, ht = 0, lambda = 0;
  Rational mass_below, bound;  // mass at height < N; 2 max(0, ht - N) / lambda
  int kappa = 0;               // ht - n deg pi
  Rational mass_at_least() const { return Rational(1) - mass_below; }
  bool bound_holds() const { return mass_at_least() >= bound; }
};

struct EscapeSeries {
  int N = 0;
  std::vector<EscapeRow> rows;
  // max |ht - n deg pi| over rows with n >= kappa_from
  int kappa_max(int kappa_from) const;
};

EscapeSeries ray_escape_experiment(const LoxodromicData& lox, const RationalEnd& xi, const FqPoly& pi,
                                   const std::vector<int>& ns, int N, const OrbitOptions& opt = {});
std::string to_csv(const EscapeSeries& s);

// Subsequence floor(r p^k / e) along which orbit sizes realize d p^k.
std::vector<int> lom_subsequence(const SplitData& sd, int p, int k_max);

// Orbit-growth table with the calibrated constant.
struct OrbitTableRow {
  int n = 0;
  std::uint64_t m = 0;  // max orbit size (full sphere) or ray orbit size
  bool full_sphere = false;
  std::uint64_t bound = 0;  // e d p^ceil(log_p((n + kappa)/r))
};
struct OrbitTable {
  SplitData split;
  int p = 0;
  int kappa = 0;  // least kappa making the bound hold for every row
  std::vector<OrbitTableRow> rows;
  bool linear_bound_holds() const;  // m <= (e d p / r)(n + kappa)
};
// Least p^j with r p^j >= x, for x >= 1; 1 when x <= r.
std::uint64_t ceil_pow(int p, long long x, int r);
std::uint64_t orbit_bound(const SplitData& s, int p, int n, int kappa);
int calibrate_kappa(const SplitData& s, int p, const std::vector<OrbitTableRow>& rows, std::size_t upto);
OrbitTable theorem31_table(const PGL2Elem& gamma, const FqPoly& pi, int n_full, int n_max, std::uint64_t budget);
std::string to_csv(const OrbitTable& t);

// Ball-counting model for heights of sphere points: mass at height h is
// proportional to 1 / |F_h|, with F_0 = PGL_2(F_q) and
// F_h = {[[a, b], [0, d]] : deg b <= h} for h >= 1.
// PGL_2(F_q[Y]) preserves vertex type, so a sphere of radius n lands on
// heights of a single parity; parity = 0 or 1 conditions the model on it,
// kAnyParity leaves it unconditioned.
inline constexpr int kAnyParity = -1;
std::uint64_t stabilizer_size(int q, int h);
double model_mass(int q, int h, int parity = kAnyParity);
double model_tail(int q, int H, int parity = kAnyParity);  // mass at height >= H
double total_variation(const HeightHistogram& emp, int q, int parity = kAnyParity);
// Parity of every height on the radius-n sector sphere seen from base height ht0.
int sphere_height_parity(int ht0, const FqPoly& pi, int n);

enum class SectorMode { Enum, Sample };
HeightHistogram sector_sphere_distribution(const SectorSpec& s, const FqPoly& pi, int n, const QuadMat& g_f,
                                            SectorMode mode, std::uint64_t count, std::uint64_t seed,
                                            std::uint64_t budget = 1u << 22);

// Longest common window of two cyclic quotient words, allowing the
// alternating unit scaling c, 1/c, c, ... that Gamma_inf-equivalence permits.
int cyclic_window(const std::vector<FqPoly>& a, const std::vector<FqPoly>& b);
bool cyclic_equivalent(const std::vector<FqPoly>& a, const std::vector<FqPoly>& b);

struct CloseSearchReport {
  int n = 0;
  int window = 0;        // W(n)
  int target_length = 0; // period length of the target word
  bool full_match = false;
  std::optional<HeckeVertex> witness;
  std::uint64_t points = 0;
};
CloseSearchReport lemma_close_search(const SectorSpec& s, const PeriodicOrbit& target, const FqPoly& pi, int n,
                                     const LoxodromicData& lox, std::uint64_t budget = 1u << 20);

struct TrendRow {
  int n = 0;
  Rational mass_below;
  Rational scaled() const { return mass_below * Rational(n); }
};
struct TrendReport {
  int N = 0;
  std::vector<TrendRow> rows;
  int increases = 0;  // steps where mass below N went up
  Rational sup_scaled;
};
TrendReport conjecture2_scan(const LoxodromicData& lox, const RationalEnd& xi, const FqPoly& pi,
                             const std::vector<int>& ns, int N, const OrbitOptions& opt = {});

}  // namespace ffdyn
