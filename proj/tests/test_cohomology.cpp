#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "cyclift/cohomology.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/parse.hpp"
#include "support/membership_oracle.hpp"
#include "support/random_poly.hpp"

using namespace cyclift;

namespace {

struct Ring {
  Variables vars;
  Polynomial operator()(const char* text) const { return parse_polynomial(text, vars); }
  LocalFraction frac(const char* text, const PrimePoint& at) const {
    auto [n, d] = parse_fraction(text, vars);
    return LocalFraction(n, d, at);
  }
};

FormNumerator scalar(const LocalFraction& v) {
  FormNumerator w;
  if (!v.is_zero()) w.coordinates.emplace(Subset{}, v);
  return w;
}

std::vector<Denominator> ones(const std::vector<Polynomial>& fs) {
  std::vector<Denominator> out;
  for (const auto& f : fs) out.push_back({f, 1});
  return out;
}

// Scalar class with one component over (f_1, ..., f_m).
CohClass scalar_class(const std::vector<Polynomial>& fs, const LocalFraction& v) {
  return CohClass(ones(fs), v.locus(), {scalar(v)});
}

// Random (m-1)-form at the origin over n variables with polynomial coordinates.
FormNumerator random_form(std::mt19937_64& rng, const Variables& vars, int degree,
                          const PrimePoint& origin) {
  FormNumerator w;
  for (const Subset& key : subsets(static_cast<int>(vars.size()), degree)) {
    Polynomial c = testgen::random_poly(rng, vars, 2, 3);
    if (!c.is_zero()) w.coordinates.emplace(key, LocalFraction::from_polynomial(c, origin));
  }
  return w;
}

}  // namespace

TEST_CASE("ch of the first-order deformation of (x)") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  CohClass c = ch_representative(DeformedKoszul({R("x")}, {R.frac("1/(x+y)", px)}, px));
  REQUIRE(c.order() == 1);
  REQUIRE(c.denominators().size() == 1);
  CHECK(c.denominators()[0] == Denominator{R("x"), 1});
  const auto& coords = c.components()[0].coordinates;
  REQUIRE(coords.size() == 1);
  CHECK(coords.begin()->first.empty());
  CHECK(coords.begin()->second == R.frac("1/(x+y)", px));
}

TEST_CASE("ch of an undeformed complex is zero") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  CohClass c = ch_representative(DeformedKoszul::undeformed({R("x")}, px, 2));
  CHECK(c.is_zero());
  CHECK(c.order() == 2);
  CHECK(class_is_trivial(c).trivial);
}

TEST_CASE("ch of (xz + eps a/z, y) carries a/z dy") {
  Ring R{Variables({"x", "y", "z"})};
  PrimePoint P = PrimePoint::sequence({R("x"), R("y")});
  LocalFraction h = R.frac("(x + 1)/z", P);
  CohClass c = ch_representative(DeformedKoszul({R("x*z"), R("y")}, {h}, P));
  const auto& coords = c.components()[0].coordinates;
  REQUIRE(coords.size() == 1);
  CHECK(coords.begin()->first == Subset{1});
  CHECK(coords.begin()->second == h);
}

TEST_CASE("ch expands the wedge of the tail in coordinates") {
  Ring R{Variables({"x", "y", "z"})};
  auto f2 = R("y + x^2");
  auto f3 = R("z");
  PrimePoint P = PrimePoint::sequence({R("x"), f2, f3});
  CohClass c = ch_representative(DeformedKoszul({R("x"), f2, f3}, {LocalFraction::one(P)}, P));
  const auto& coords = c.components()[0].coordinates;
  // d(y + x^2) ∧ dz = 2x dx∧dz + dy∧dz
  REQUIRE(coords.size() == 2);
  CHECK(coords.at(Subset{0, 2}).numerator() == R("2*x"));
  CHECK(coords.at(Subset{1, 2}).numerator() == R("1"));
}

TEST_CASE("triviality examples at the origin") {
  Ring R{Variables({"x", "y", "z"})};
  PrimePoint m = PrimePoint::origin(R.vars);
  auto y = LocalFraction::from_polynomial(R("y"), m);
  auto one = LocalFraction::one(m);
  auto xz = LocalFraction::from_polynomial(R("x*z"), m);
  CHECK(class_is_trivial(scalar_class({R("x"), R("y")}, y)).trivial);
  TrivialityVerdict v = class_is_trivial(scalar_class({R("x"), R("y")}, one));
  CHECK_FALSE(v.trivial);
  REQUIRE(v.witnesses.size() == 1);
  CHECK_FALSE(v.witnesses[0].member);
  CHECK(v.witnesses[0].component == 1);
  CHECK(class_is_trivial(scalar_class({R("x"), R("y"), R("z")}, xz)).trivial);
}

TEST_CASE("class_equal examples at (x)") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  auto a = scalar_class({R("x")}, R.frac("1/(x+y)", px));
  auto b = scalar_class({R("x")}, R.frac("1/y", px));
  auto c = scalar_class({R("x")}, R.frac("2/y", px));
  CHECK(class_equal(a, b));
  CHECK(class_equal(a, a));
  CHECK_FALSE(class_equal(b, c));
  // At a prime principal ideal, membership of n/s (s a unit) reduces to n in (x).
  CHECK_FALSE(oracle::member(R("1"), {R("x")}, 6));
  CHECK(oracle::member(R("-x"), {R("x")}, 6));
}

TEST_CASE("class_equal rejects mismatched shapes") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  PrimePoint py = PrimePoint::sequence({R("y")});
  auto a = scalar_class({R("x")}, LocalFraction::one(px));
  auto b = scalar_class({R("y")}, LocalFraction::one(py));
  CHECK_THROWS_AS(class_equal(a, b), std::invalid_argument);
}

TEST_CASE("boundary examples") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  PrimePoint m = PrimePoint::origin(R.vars);

  CohClass b1 = boundary(scalar_class({R("x")}, R.frac("1/y", px)), R("y"));
  CHECK(b1.locus() == m);
  CHECK(b1.denominators() == std::vector<Denominator>{{R("x"), 1}, {R("y"), 1}});
  CHECK(b1.components()[0].coordinates.at(Subset{}) == LocalFraction::one(m));
  CHECK_FALSE(class_is_trivial(b1).trivial);

  CohClass b2 = boundary(scalar_class({R("x")}, LocalFraction::from_polynomial(R("x + 3*y^2 + 1"), px)),
                         R("y"));
  CHECK(b2.components()[0].coordinates.at(Subset{}).numerator() == R("x*y + 3*y^3 + y"));
  CHECK(class_is_trivial(b2).trivial);

  CohClass zero(ones({R("x")}), px, {FormNumerator{}});
  CohClass b3 = boundary(zero, R("y"));
  CHECK(b3.is_zero());
  CHECK(b3.denominators().back() == Denominator{R("y"), 1});
}

TEST_CASE("boundary picks the largest power and clears units") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  CohClass c(ones({R("x")}), px,
             {scalar(R.frac("1/(y^2*(1 + x))", px)), scalar(R.frac("x/y", px))});
  CohClass b = boundary(c, R("y"));
  CHECK(b.denominators().back() == Denominator{R("y"), 2});
  CHECK(b.components()[0].coordinates.begin()->second.numerator() == R("1"));
  CHECK(b.components()[0].coordinates.begin()->second.denominator() == R("x + 1"));
  CHECK(b.components()[1].coordinates.begin()->second.numerator() == R("x*y"));
}

TEST_CASE("boundary rejects unsupported numerators and bad divisors") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  CHECK_THROWS_AS(boundary(scalar_class({R("x")}, R.frac("1/(x+y)", px)), R("y")), UnsupportedShape);
  CHECK_THROWS_AS(boundary(scalar_class({R("x")}, R.frac("1/y", px)), R("x^2 + x")),
                  std::invalid_argument);
  CHECK_THROWS_AS(boundary(scalar_class({R("x")}, R.frac("1/y", px)), R("y + 1")),
                  std::invalid_argument);
}

TEST_CASE("reorder_class examples") {
  Ring R{Variables({"x", "y"})};
  PrimePoint m = PrimePoint::origin(R.vars);
  auto a = LocalFraction::from_polynomial(R("1 + x"), m);
  CohClass c = scalar_class({R("x"), R("y")}, a);
  CohClass swapped = reorder_class(c, {1, 0});
  CHECK(swapped.denominators() == std::vector<Denominator>{{R("y"), 1}, {R("x"), 1}});
  CHECK(swapped.components()[0].coordinates.at(Subset{}) == -a);
  CHECK(reorder_class(c, {0, 1}) == c);
  CHECK(reorder_class(swapped, {1, 0}) == c);
}

TEST_CASE("generalized-fraction rule on 100 random forms") {
  Variables vars({"x", "y", "z"});
  Ring R{vars};
  PrimePoint m = PrimePoint::origin(vars);
  const std::vector<Polynomial> fs{R("x + y^2"), R("y - z^2"), R("z")};
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    FormNumerator omega = random_form(rng, vars, 2, m);
    const std::size_t slot = static_cast<std::size_t>(trial % 3);
    FormNumerator shifted;
    for (const auto& [key, v] : omega.coordinates) shifted.coordinates.emplace(key, v.times(fs[slot]));
    auto doubled = ones(fs);
    doubled[slot].power = 2;
    CohClass c1(ones(fs), m, {omega});
    CohClass c2(doubled, m, {shifted});
    CHECK(class_equal(c1, c2));
    CHECK(class_equal(c2, c1));
  }
}

TEST_CASE("equality is reflexive, symmetric and transitive on random triples") {
  Variables vars({"x", "y", "z"});
  Ring R{vars};
  PrimePoint m = PrimePoint::origin(vars);
  const std::vector<Polynomial> fs{R("x"), R("y"), R("z")};
  std::mt19937_64 rng(99);
  auto trivial_form = [&]() {
    FormNumerator w;
    for (const Subset& key : subsets(3, 2)) {
      Polynomial c(vars);
      for (const auto& f : fs) c += f * testgen::random_poly(rng, vars, 1, 2);
      if (!c.is_zero()) w.coordinates.emplace(key, LocalFraction::from_polynomial(c, m));
    }
    return CohClass(ones(fs), m, {w});
  };
  for (int trial = 0; trial < 12; ++trial) {
    CohClass c1(ones(fs), m, {random_form(rng, vars, 2, m)});
    CohClass c2 = c1 + trivial_form();
    CohClass c3 = c2 + trivial_form();
    CohClass other(ones(fs), m, {random_form(rng, vars, 2, m)});
    CHECK(class_equal(c1, c1));
    CHECK(class_equal(c1, c2) == class_equal(c2, c1));
    CHECK(class_equal(c1, other) == class_equal(other, c1));
    CHECK(class_equal(c1, c2));
    CHECK(class_equal(c2, c3));
    CHECK(class_equal(c1, c3));
  }
}

TEST_CASE("triviality agrees with the linear-algebra oracle at the origin") {
  // The denominators generate an m-primary ideal, so local and global
  // membership coincide for polynomial coordinates.
  Variables vars({"x", "y"});
  Ring R{vars};
  PrimePoint m = PrimePoint::origin(vars);
  const std::vector<Polynomial> fs{R("x^2 + y"), R("y^2")};
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial u = testgen::random_poly(rng, vars, 3, 3);
    if (trial % 2) u = u * R("y") + R("x^2") * testgen::random_poly(rng, vars, 1, 2);
    std::vector<Denominator> den{{fs[0], 1}, {fs[1], 1}};
    CohClass c(den, m, {scalar(LocalFraction::from_polynomial(u, m))});
    CHECK(class_is_trivial(c).trivial == oracle::member(u, fs, 6));
  }
}

TEST_CASE("triviality is invariant under reordering") {
  Variables vars({"x", "y", "z"});
  Ring R{vars};
  PrimePoint m = PrimePoint::origin(vars);
  const std::vector<Polynomial> fs{R("x"), R("y + x^2"), R("z")};
  std::mt19937_64 rng(17);
  std::vector<int> perm{0, 1, 2};
  for (int trial = 0; trial < 12; ++trial) {
    Polynomial u = testgen::random_poly(rng, vars, 2, 3);
    if (trial % 3 == 0) u = u * R("z");
    CohClass c(ones(fs), m, {scalar(LocalFraction::from_polynomial(u, m))});
    const bool base = class_is_trivial(c).trivial;
    do {
      CHECK(class_is_trivial(reorder_class(c, perm)).trivial == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("boundary is additive") {
  Variables vars({"x", "y"});
  Ring R{vars};
  PrimePoint px = PrimePoint::sequence({R("x")});
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto random_coefficient = [&]() {
      Polynomial n = testgen::random_poly(rng, vars, 2, 3);
      Polynomial s = Polynomial::constant(vars, Rational(1)) + testgen::random_poly(rng, vars, 1, 2, 3, false);
      Polynomial d = s * R("y").pow(static_cast<unsigned>(trial % 3));
      return LocalFraction(n, d, px);
    };
    CohClass c1 = scalar_class({R("x")}, random_coefficient());
    CohClass c2 = scalar_class({R("x")}, random_coefficient());
    CHECK(class_equal(boundary(c1 + c2, R("y")), boundary(c1, R("y")) + boundary(c2, R("y"))));
  }
}

TEST_CASE("swapped boundaries of the split p = 1 cycle cancel") {
  Ring R{Variables({"x", "y"})};
  PrimePoint px = PrimePoint::sequence({R("x")});
  PrimePoint py = PrimePoint::sequence({R("y")});
  CohClass b1 = boundary(scalar_class({R("x")}, R.frac("1/y", px)), R("y"));
  CohClass b2 = boundary(scalar_class({R("y")}, R.frac("1/x", py)), R("x"));
  CHECK_FALSE(class_is_trivial(b1).trivial);
  CHECK_FALSE(class_is_trivial(b2).trivial);
  CHECK(class_is_trivial(b1 + reorder_class(b2, {1, 0})).trivial);
}
