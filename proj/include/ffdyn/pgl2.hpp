#pragma once

#include <cstdint>
#include <string>

#include "ffdyn/mat2.hpp"
#include "ffdyn/poly.hpp"
#include "ffdyn/quad.hpp"
#include "ffdyn/rational.hpp"
#include "ffdyn/ratfunc.hpp"

namespace ffdyn {

using PolyMat = Mat2<FqPoly>;
using QuadMat = Mat2<QuadElem>;

PolyMat poly_identity(const FieldPtr& F);
PolyMat diag(const FqPoly& x, const FqPoly& y);
FqPoly content(const PolyMat& m);
// Entrywise remainder.
PolyMat mod(const PolyMat& m, const FqPoly& N);
PolyMat mulmod(const PolyMat& x, const PolyMat& y, const FqPoly& N);
bool is_zero_mod(const PolyMat& m, const FqPoly& N);

// Element of PGL_2(K), stored as the primitive polynomial representative
// whose first nonzero entry (in the order a, b, c, d) is monic.
class PGL2Elem {
 public:
  PGL2Elem() = default;
  explicit PGL2Elem(const PolyMat& m);
  explicit PGL2Elem(const Mat2<RatFunc>& m);

  const PolyMat& mat() const { return m_; }
  const FieldPtr& field() const { return m_.a.field(); }
  // In PGL_2(F_q[Y]) exactly when the primitive representative has unit det.
  bool in_gamma_infty() const { return m_.det().degree() == 0; }
  PGL2Elem inverse() const { return PGL2Elem(m_.adjugate()); }
  friend PGL2Elem operator*(const PGL2Elem& x, const PGL2Elem& y) { return PGL2Elem(x.m_ * y.m_); }
  friend bool operator==(const PGL2Elem& x, const PGL2Elem& y) { return x.m_ == y.m_; }

 private:
  PolyMat m_;
};

std::string to_string(const PolyMat& m);  // "a,b;c,d"
std::string to_string(const PGL2Elem& g);
PolyMat parse_polymat(const FieldPtr& F, const std::string& s);
Mat2<RatFunc> parse_ratmat(const FieldPtr& F, const std::string& s);

// Translation length on the Bruhat-Tits tree of K_inf: |v(l+) - v(l-)|.
int translation_length_infty(const PGL2Elem& g);
int translation_length_infty(const PolyMat& g);

// Fixed points and eigenvalues of a loxodromic element. "plus" is the
// attracting end, eigenvalue of larger absolute value.
struct LoxodromicData {
  PGL2Elem gamma;
  QuadFieldPtr K;  // K(sqrt(tr^2 - 4 det))
  QuadElem f_plus, f_minus;
  QuadElem lambda_plus, lambda_minus;
  int ell = 0;
};
// Throws NotLoxodromic for zero translation length.
LoxodromicData fixed_quadratic(const PGL2Elem& gamma);

// g_f = [[f+, f-], [1, 1]]; satisfies gamma g_f = g_f diag(l+, l-).
QuadMat periodic_point_rep(const LoxodromicData& lox);

// Mobius action of a polynomial matrix on K(sqrt D).
QuadElem mobius(const PolyMat& m, const QuadElem& x);
QuadMat to_quad(const PolyMat& m, const QuadFieldPtr& K);

struct SplitData {
  int e = 0, d = 0, r = 0;
  Rational lom;
};
// Splitting data of the eigenvalues of gamma at the place pi. prec is the
// starting pi-adic precision for split places.
SplitData split_data_at_nu(const PGL2Elem& gamma, const FqPoly& pi, int prec = 16);
Rational lom(const PGL2Elem& gamma, const FqPoly& pi);
std::string split_data_json(const SplitData& s);

// Least k in [1, k_max] with h gamma^k h^-1 in PGL_2(F_q[Y]); h is given by
// a polynomial representative. Throws PeriodSearchExhausted.
struct ConjugatePeriod {
  int k = 0;
  PGL2Elem delta;  // h gamma^k h^-1
};
ConjugatePeriod find_primitive_period(const PolyMat& h, const PGL2Elem& gamma, int k_max);

// Cartan distance d(*, g*) in the tree of K_inf for a polynomial matrix.
int cartan_distance(const PolyMat& g);

}  // namespace ffdyn
