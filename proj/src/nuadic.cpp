#include "ffdyn/nuadic.hpp"

#include "ffdyn/error.hpp"

namespace ffdyn {

namespace {

int val_or(const FqPoly& a, const FqPoly& pi, int if_zero) { return a.is_zero() ? if_zero : valuation(a, pi); }

// Square root of a unit u modulo pi^n lifting s0 (s0^2 = u mod pi).
FqPoly hensel_sqrt(const FqPoly& u, const FqPoly& s0, const FqPoly& pi, int n) {
  const FqPoly mod = pow(pi, static_cast<unsigned>(n));
  const FqPoly two = FqPoly::constant(pi.field(), pi.F().from_int(2));
  FqPoly s = s0;
  for (int prec = 1; prec < n;) {
    prec = std::min(2 * prec, n);
    const FqPoly m = pow(pi, static_cast<unsigned>(prec));
    const FqPoly err = (s * s - u) % m;
    s = (s - mulmod(err, invmod(two * s, m), m)) % m;
  }
  return s % mod;
}

}  // namespace

LocalSplitting local_splitting(const FqPoly& delta, const FqPoly& pi) {
  if (!is_irreducible(pi)) fail(ErrorKind::DomainError, to_string(pi) + " is not irreducible");
  const int w = valuation(delta, pi);
  FqPoly unit = delta;
  for (int i = 0; i < w; ++i) unit = unit / pi;
  if (w % 2 != 0) return {LocalType::Ramified, w, unit};
  return {sqrt_mod_irreducible(unit, pi) ? LocalType::Split : LocalType::Inert, w, unit};
}

std::optional<FqPoly> sqrt_mod_irreducible(const FqPoly& a, const FqPoly& pi) {
  const FqPoly r = a % pi;
  const FieldPtr& F = pi.field();
  std::uint64_t count = 1;
  for (int i = 0; i < pi.degree(); ++i) count *= F->q();
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const FqPoly x = poly_from_index(F, idx, pi.degree());
    if (mulmod(x, x, pi) == r) return x;
  }
  return std::nullopt;
}

FqPoly teichmuller_lift(const FqPoly& a, const FqPoly& pi, int n) {
  const FqPoly mod = pow(pi, static_cast<unsigned>(n));
  std::uint64_t qnu = 1;
  for (int i = 0; i < pi.degree(); ++i) qnu *= pi.F().q();
  // a^(qnu^j) converges to the lift; qnu^j >= n digits suffice.
  FqPoly x = a % mod;
  for (std::uint64_t reach = 1; reach < static_cast<std::uint64_t>(n); reach *= qnu) x = powmod(x, qnu, mod);
  return x;
}

Rational quad_val_nu(const QuadElem& x, const FqPoly& pi, int prec) {
  if (x.is_zero()) fail(ErrorKind::DomainError, "valuation of zero");
  const LocalSplitting ls = local_splitting(x.delta(), pi);
  const int vc = valuation(x.c(), pi);
  if (ls.type != LocalType::Split) {
    const RatFunc n = x.norm();
    return Rational(valuation(n.num(), pi) - valuation(n.den(), pi), 2);
  }
  const int half = ls.delta_valuation / 2;
  if (x.b().is_zero()) return Rational(valuation(x.a(), pi) - vc);
  const int big = 1 << 29;
  const int va = val_or(x.a(), pi, big);
  const int vb = valuation(x.b(), pi) + half;
  if (va != vb) return Rational(std::min(va, vb) - vc);
  const FqPoly s0 = *sqrt_mod_irreducible(ls.unit_part, pi);
  const FqPoly pih = pow(pi, static_cast<unsigned>(half));
  for (int n = std::max(prec, va + 2);; n *= 2) {
    const FqPoly mod = pow(pi, static_cast<unsigned>(n));
    const FqPoly s = hensel_sqrt(ls.unit_part % mod, s0, pi, n);
    const FqPoly u = (x.a() + mulmod(x.b() * pih, s, mod)) % mod;
    if (!u.is_zero()) return Rational(valuation(u, pi) - vc);
  }
}

}  // namespace ffdyn
