#include "doctest.h"

#include <random>

#include "cyclift/eps.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/local_ring.hpp"
#include "cyclift/parse.hpp"
#include "support/random_poly.hpp"

using namespace cyclift;

namespace {

struct Ring {
  Variables vars;
  Polynomial operator()(const char* text) const { return parse_polynomial(text, vars); }
  LocalFraction frac(const char* num, const char* den, const PrimePoint& at) const {
    return LocalFraction((*this)(num), (*this)(den), at);
  }
};

}  // namespace

TEST_CASE("prime points") {
  Ring R{Variables({"x", "y"})};
  PrimePoint m = PrimePoint::origin(R.vars);
  PrimePoint px = PrimePoint::sequence({R("x")});
  CHECK(m.contains(R("x + y^2")));
  CHECK_FALSE(m.contains(R("1 + x")));
  CHECK(px.contains(R("x*y")));
  CHECK_FALSE(px.contains(R("y")));
  CHECK(px == PrimePoint::sequence({R("x")}));
  CHECK(px != m);
  CHECK_THROWS_AS(PrimePoint::sequence({R("x"), R("x*y")}), NotRegularSequence);
  CHECK_THROWS_AS(PrimePoint::sequence({R("x + 1")}), std::invalid_argument);
}

TEST_CASE("fractions reject denominators in the locus") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  CHECK_THROWS_AS(R.frac("1", "x", px), InvalidFraction);
  CHECK_THROWS_AS(R.frac("1", "x + y", PrimePoint::origin(R.vars)), InvalidFraction);
  CHECK_NOTHROW(R.frac("1", "x + y", px));
}

TEST_CASE("fraction arithmetic normalizes by exact division") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  auto a = R.frac("x*y", "y", px);
  CHECK(a.numerator() == R("x"));
  CHECK(a.denominator() == R("1"));
  auto b = R.frac("1", "x + y", px) - R.frac("1", "y", px);
  CHECK(b == R.frac("-x", "(x+y)*y", px));
  CHECK((R.frac("1", "2*y", px)).denominator() == R("y"));
  CHECK((R.frac("1", "y", px) * R.frac("y", "1", px)) == LocalFraction::one(px));
}

TEST_CASE("local_ideal_member examples") {
  Ring R{Variables({"x", "y"})};
  PrimePoint m = PrimePoint::origin(R.vars);
  PrimePoint px = PrimePoint::sequence({R("x")});
  IdealBasis xy(R.vars, {R("x"), R("y")});
  IdealBasis x(R.vars, {R("x")});
  CHECK(local_ideal_member(R.frac("y", "1", m), xy, m));
  CHECK_FALSE(local_ideal_member(R.frac("1", "1 + x", m), xy, m));
  CHECK(local_ideal_member(R.frac("-x", "(x+y)*y", px), x, px));
  CHECK_FALSE(local_ideal_member(R.frac("1", "y", px), x, px));
  // (x*y) localized at (x) contains x, since y is a unit there
  CHECK(local_ideal_member(R.frac("x", "1", px), IdealBasis(R.vars, {R("x*y")}), px));
  CHECK_FALSE(local_ideal_member(R.frac("x", "1", m), IdealBasis(R.vars, {R("x*y")}), m));
  // (x*(1+y)) at the origin contains x
  CHECK(local_ideal_member(R.frac("x", "1", m), IdealBasis(R.vars, {R("x + x*y")}), m));
  CHECK_THROWS_AS(local_ideal_member(LocalFraction(R("1"), R("x"), PrimePoint::sequence({R("y")})),
                                     x, px),
                  InvalidFraction);
}

TEST_CASE("local membership matches global membership for m-primary ideals") {
  std::mt19937_64 rng(21);
  Ring R{Variables({"x", "y"})};
  PrimePoint m = PrimePoint::origin(R.vars);
  // m-primary: contains powers of every variable
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens{R("x^2"), R("y^3")};
    Polynomial extra = testgen::random_poly(rng, R.vars, 3, 3, 2, false);
    gens.push_back(extra);
    IdealBasis I = groebner_basis(IdealBasis(R.vars, gens));
    Polynomial u = testgen::random_poly(rng, R.vars, 4, 4, 3, false);
    CHECK(local_ideal_member(LocalFraction::from_polynomial(u, m), I, m) == ideal_member(u, I));
  }
}

TEST_CASE("eps_invert examples") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  auto F = [&](const char* n, const char* d = "1") { return R.frac(n, d, px); };
  auto zero = LocalFraction::zero(px);

  EpsElement u1({F("1"), F("x")});
  CHECK(eps_invert(u1) == EpsElement({F("1"), F("-x")}));

  EpsElement u2({F("y"), zero, zero});
  CHECK(eps_invert(u2) == EpsElement({F("1", "y"), zero, zero}));

  EpsElement u3({F("y"), F("1"), zero});
  CHECK(eps_invert(u3) == EpsElement({F("1", "y"), F("-1", "y^2"), F("1", "y^3")}));

  CHECK_THROWS_AS(eps_invert(EpsElement({F("x"), F("1")})), NonUnitError);
}

TEST_CASE("eps_invert produces an exact inverse") {
  std::mt19937_64 rng(22);
  Ring R{Variables({"x", "y", "z"})};
  PrimePoint loci[] = {PrimePoint::origin(R.vars), PrimePoint::sequence({R("x")}),
                       PrimePoint::sequence({R("x"), R("y")})};
  int tested = 0;
  while (tested < 200) {
    const PrimePoint& P = loci[tested % 3];
    const int order = static_cast<int>(rng() % 4);
    std::vector<LocalFraction> slots;
    for (int i = 0; i <= order; ++i) {
      Polynomial num = testgen::random_poly(rng, R.vars, 2, 3);
      Polynomial den = testgen::random_poly(rng, R.vars, 1, 2);
      if (den.is_zero() || P.contains(den)) den = Polynomial::constant(R.vars, Rational(1));
      slots.emplace_back(num, den, P);
    }
    EpsElement u(slots);
    if (u[0].is_zero() || !u[0].is_unit()) continue;
    EpsElement v = eps_invert(u);
    CHECK(u * v == EpsElement::constant(LocalFraction::one(P), order));
    ++tested;
  }
}

TEST_CASE("eps truncation and arithmetic") {
  Ring R{Variables({"x", "y"})};
  PrimePoint m = PrimePoint::origin(R.vars);
  auto F = [&](const char* n) { return R.frac(n, "1", m); };
  EpsElement a({F("x"), F("1"), F("y")});
  EpsElement b({F("1"), F("x"), F("0")});
  EpsElement p = a * b;
  CHECK(p == EpsElement({F("x"), F("x^2 + 1"), F("x + y")}));
  CHECK(p.truncate(1) == a.truncate(1) * b.truncate(1));
  CHECK_FALSE(a.is_eps_free());
  CHECK(a.truncate(0).is_eps_free());
}
