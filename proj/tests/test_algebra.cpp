#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffdyn/error.hpp"
#include "ffdyn/quad.hpp"
#include "ffdyn/ratfunc.hpp"
#include "ffdyn/rational.hpp"
#include "ffdyn/residue.hpp"
#include "support.hpp"

using namespace ffdyn;
using ffdyn::testing::P;

TEST_CASE("polynomial arithmetic examples over F_3") {
  auto F = Field::make(3);
  CHECK(gcd(P(F, "Y^2+2"), P(F, "Y+2")) == P(F, "Y+2"));
  auto [q, r] = divrem(P(F, "Y^3"), P(F, "Y"));
  CHECK(q == P(F, "Y^2"));
  CHECK(r.is_zero());
  CHECK(P(F, "Y+1") * P(F, "Y+2") == P(F, "Y^2+2"));
  CHECK_THROWS_AS(divrem(P(F, "Y"), FqPoly(F)), Error);
  try {
    (void)(P(F, "Y") / FqPoly(F));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("gcd is monic and xgcd is a Bezout identity") {
  auto F = Field::make(5);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto a = testing::random_nonzero(rng, F, 6), b = testing::random_nonzero(rng, F, 5);
    auto x = xgcd(a, b);
    CHECK(x.g.is_monic());
    CHECK(x.g == gcd(a, b));
    CHECK(x.s * a + x.t * b == x.g);
    CHECK(divides(x.g, a));
    CHECK(divides(x.g, b));
  }
}

TEST_CASE("irreducibility examples") {
  auto F = Field::make(3);
  CHECK(is_irreducible(P(F, "Y")));
  CHECK(is_irreducible(P(F, "Y^2+1")));
  CHECK_FALSE(is_irreducible(P(F, "Y^2+2")));
  try {
    (void)is_irreducible(P(F, "2"));
    FAIL("constant accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidDegree);
  }
}

TEST_CASE("irreducibility agrees with exhaustive factor search, F_3, degree <= 4") {
  auto F = Field::make(3);
  std::vector<std::vector<FqPoly>> monics(5);
  for (int d = 1; d <= 4; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= 3;
    for (std::uint64_t idx = 0; idx < count; ++idx) monics[d].push_back(poly_from_index(F, idx, d) + FqPoly::monomial(F, 1, d));
  }
  int irreducible = 0;
  for (int d = 1; d <= 4; ++d)
    for (const auto& f : monics[d]) {
      bool has_factor = false;
      for (int k = 1; 2 * k <= d && !has_factor; ++k)
        for (const auto& g : monics[k])
          if (divides(g, f)) {
            has_factor = true;
            break;
          }
      CHECK(is_irreducible(f) == !has_factor);
      irreducible += !has_factor;
    }
  // Necklace counts 3 + 3 + 8 + 18.
  CHECK(irreducible == 32);
  CHECK(monic_irreducibles(F, 4).size() == 18);
}

TEST_CASE("ring and field exactness on random data") {
  std::mt19937_64 rng(5);
  for (auto F : {Field::make(3), Field::make(5), Field::make(3, 2)}) {
    for (int i = 0; i < 50; ++i) {
      auto a = testing::random_poly(rng, F, 7), b = testing::random_nonzero(rng, F, 4);
      CHECK((a + b) - b == a);
      CHECK((a * b) / b == a);
      auto [q, r] = divrem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      RatFunc x(a, b), y(b, testing::random_nonzero(rng, F, 3));
      CHECK((x + y) - y == x);
      if (!y.is_zero()) CHECK((x * y) / y == x);
    }
    for (FqElem a = 0; a < F->q(); ++a)
      for (FqElem b = 1; b < F->q(); ++b) {
        CHECK(F->sub(F->add(a, b), b) == a);
        CHECK(F->div(F->mul(a, b), b) == a);
      }
  }
}

TEST_CASE("extension field F_9 and text round trip") {
  auto F = Field::make(3, 2);
  CHECK(F->q() == 9);
  for (FqElem a = 1; a < 9; ++a) CHECK(F->mul(a, F->inv(a)) == 1);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    auto f = testing::random_poly(rng, F, 5);
    CHECK(parse_poly(F, to_string(f)) == f);
  }
  auto F5 = Field::make(5);
  for (int i = 0; i < 50; ++i) {
    auto f = testing::random_poly(rng, F5, 6);
    CHECK(parse_poly(F5, to_string(f)) == f);
  }
  CHECK(to_string(P(F5, "3*Y^2+Y+4")) == "3*Y^2+Y+4");
  CHECK(to_string(parse_poly(F5, "Y^2-1")) == "Y^2+4");
  CHECK_THROWS_AS(parse_poly(F5, "Y^^2"), Error);
}

TEST_CASE("parse errors carry ParseError") {
  auto F = Field::make(3);
  for (const char* bad : {"Y^2+", "3*Y", "Y^-1", "Z", ""}) {
    try {
      (void)parse_poly(F, bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
}

TEST_CASE("residue rings") {
  auto F = Field::make(3);
  auto R = std::make_shared<const ResidueRing>(P(F, "Y^3"));
  ResidueElem a(R, P(F, "Y+1")), z(R, P(F, "Y"));
  CHECK(a.is_unit());
  CHECK_FALSE(z.is_unit());
  CHECK((a * a.inv()).value().is_one());
  CHECK(a.pow(3).value() == P(F, "1"));  // (1+Y)^3 = 1 + Y^3
  CHECK(ResidueElem(R, P(F, "Y^4+Y")).value() == P(F, "Y"));
}

TEST_CASE("rationals") {
  Rational a(6, -4);
  CHECK(a.to_string() == "-3/2");
  CHECK(a.floor() == -2);
  CHECK(a.ceil() == -1);
  CHECK(Rational::parse("7/14") == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("quadratic minimal polynomial roots") {
  auto F = Field::make(3);
  // f^2 - Y f - 1: discriminant Y^2 + 4 = Y^2 + 1.
  auto [f, g] = quad_minpoly_root(RatFunc(-P(F, "Y")), RatFunc(P(F, "2")));
  CHECK(f.delta() == P(F, "Y^2+1"));
  CHECK((f * f - f * QuadElem::from_poly(f.quad_field(), P(F, "Y")) - QuadElem::from_poly(f.quad_field(), P(F, "1"))).is_zero());
  CHECK(g == f.conj());
  auto [s, t] = quad_minpoly_root(RatFunc(FqPoly(F)), RatFunc(-P(F, "Y^2+1")));
  CHECK(s == QuadElem::sqrt_delta(s.quad_field()));
  CHECK(t == -s);
  try {
    (void)quad_minpoly_root(RatFunc(FqPoly(F)), RatFunc(-P(F, "Y^2")));
    FAIL("square discriminant accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotIrrational);
  }
  auto F2 = Field::make(2);
  CHECK(P(F2, "Y+1") * P(F2, "Y+1") == P(F2, "Y^2+1"));  // polynomial arithmetic still fine in characteristic 2
  try {
    (void)quad_minpoly_root(RatFunc(P(F2, "Y")), RatFunc(P(F2, "1")));
    FAIL("characteristic 2 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedCharacteristic);
  }
}

TEST_CASE("random monic quadratics: the returned roots satisfy the polynomial") {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (auto F : {Field::make(3), Field::make(5), Field::make(3, 2)}) {
    while (checked < 20 * (F->q() == 3 ? 1 : F->q() == 5 ? 2 : 3)) {
      RatFunc B(testing::random_poly(rng, F, 3), testing::random_monic(rng, F, 1));
      RatFunc C(testing::random_poly(rng, F, 3), FqPoly::constant(F, 1));
      try {
        auto [f, g] = quad_minpoly_root(B, C);
        auto K = f.quad_field();
        for (const auto& x : {f, g})
          CHECK((x * x + QuadElem::from_ratfunc(K, B) * x + QuadElem::from_ratfunc(K, C)).is_zero());
        CHECK(!(f - g).is_rational());
        ++checked;
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotIrrational);
      }
    }
  }
}

TEST_CASE("QuadElem normalization, conjugation, norm and trace") {
  std::mt19937_64 rng(9);
  auto F = Field::make(5);
  auto K = make_quad_field(P(F, "Y^2+Y+2"));
  for (int i = 0; i < 100; ++i) {
    QuadElem x(K, testing::random_poly(rng, F, 3), testing::random_nonzero(rng, F, 2), testing::random_nonzero(rng, F, 2));
    QuadElem again(K, x.a(), x.b(), x.c());
    CHECK(again == x);
    CHECK(x.c().is_monic());
    CHECK(gcd(gcd(x.a(), x.b()), x.c()).is_one());
    CHECK(x.conj().conj() == x);
    const QuadElem n = x * x.conj(), t = x + x.conj();
    CHECK(n.is_rational());
    CHECK(t.is_rational());
    CHECK(n.rational_part() == x.norm());
    CHECK(t.rational_part() == x.trace());
    CHECK(parse_quad(F, to_string(x)) == x);
  }
  CHECK_THROWS_AS(make_quad_field(P(F, "Y^2+2*Y+1")), Error);
}
