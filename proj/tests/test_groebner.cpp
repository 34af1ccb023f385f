#include "doctest.h"

#include <algorithm>
#include <random>

#include "cyclift/groebner.hpp"
#include "cyclift/parse.hpp"
#include "support/membership_oracle.hpp"
#include "support/random_poly.hpp"

using namespace cyclift;

namespace {

std::vector<Polynomial> polys(const Variables& vars, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, vars));
  return out;
}

IdealBasis ideal(const Variables& vars, std::initializer_list<const char*> texts) {
  return IdealBasis(vars, polys(vars, texts));
}

}  // namespace

TEST_CASE("principal and coordinate ideals are their own bases") {
  Variables vars({"x", "y"});
  CHECK(groebner_basis(ideal(vars, {"x"})).groebner() == polys(vars, {"x"}));
  // sorted by increasing leading monomial: y < x
  CHECK(groebner_basis(ideal(vars, {"x", "y"})).groebner() == polys(vars, {"y", "x"}));
}

TEST_CASE("basis of (x^2 - y, x*y - 1)") {
  Variables vars({"x", "y"});
  IdealBasis gb = groebner_basis(ideal(vars, {"x^2 - y", "x*y - 1"}));
  for (const char* g : {"x^2 - y", "x*y - 1", "y^3 - 1"}) {
    CHECK(normal_form(parse_polynomial(g, vars), gb).is_zero());
  }
  // independent confirmation by linear algebra, cofactor degree <= 6
  CHECK(oracle::member(parse_polynomial("y^3 - 1", vars), polys(vars, {"x^2 - y", "x*y - 1"}), 6));
  CHECK(groebner_basis(gb).groebner() == gb.groebner());
}

TEST_CASE("ideal_member examples") {
  Variables vars({"x", "y"});
  CHECK(ideal_member(parse_polynomial("x^2*y + y*x", vars), ideal(vars, {"x"})));
  CHECK_FALSE(ideal_member(parse_polynomial("1", vars), ideal(vars, {"x", "y"})));
  CHECK(ideal_member(parse_polynomial("y^3 - 1", vars), ideal(vars, {"x^2 - y", "x*y - 1"})));
  CHECK(ideal_member(Polynomial(vars), IdealBasis(vars, {})));
  CHECK_FALSE(ideal_member(parse_polynomial("x", vars), IdealBasis(vars, {})));
}

TEST_CASE("normal form is idempotent") {
  std::mt19937_64 rng(11);
  Variables vars({"x", "y", "z"});
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(testgen::random_poly(rng, vars, 2, 3));
    IdealBasis gb = groebner_basis(IdealBasis(vars, gens));
    Polynomial u = testgen::random_poly(rng, vars, 4, 5);
    Polynomial r = normal_form(u, gb);
    CHECK(normal_form(r, gb) == r);
    CHECK(ideal_member(u - r, gb));
  }
}

TEST_CASE("membership is closed under rational combinations") {
  std::mt19937_64 rng(12);
  Variables vars({"x", "y", "z"});
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(testgen::random_poly(rng, vars, 2, 3, 3, false));
    IdealBasis gb = groebner_basis(IdealBasis(vars, gens));
    Polynomial u = testgen::random_poly(rng, vars, 2, 3) * gens[0] +
                   testgen::random_poly(rng, vars, 1, 2) * gens[1];
    Polynomial v = testgen::random_poly(rng, vars, 2, 3) * gens[1];
    REQUIRE(ideal_member(u, gb));
    REQUIRE(ideal_member(v, gb));
    CHECK(ideal_member(u * Rational(3, 7) - v * Rational(5, 2), gb));
  }
}

TEST_CASE("reduced basis does not depend on generator order") {
  std::mt19937_64 rng(13);
  Variables vars({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testgen::random_poly(rng, vars, 2, 3));
    auto reference = groebner_basis(IdealBasis(vars, gens)).groebner();
    std::sort(gens.begin(), gens.end(), canonical_less);
    do {
      CHECK(groebner_basis(IdealBasis(vars, gens)).groebner() == reference);
    } while (std::next_permutation(gens.begin(), gens.end(), canonical_less));
  }
}

TEST_CASE("ideal_member agrees with the linear-algebra oracle") {
  std::mt19937_64 rng(14);
  Variables vars({"x", "y"});
  int members = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(testgen::random_poly(rng, vars, 2, 3, 2, false));
    Polynomial u = trial % 2 ? testgen::random_poly(rng, vars, 3, 4)
                             : testgen::random_poly(rng, vars, 1, 2) * gens[0] +
                                   testgen::random_poly(rng, vars, 1, 2) * gens[1];
    bool gb = ideal_member(u, IdealBasis(vars, gens));
    members += gb;
    CHECK(gb == oracle::member(u, gens, 8));
  }
  CHECK(members >= 15);
}

TEST_CASE("ideal quotient") {
  Variables vars({"x", "y"});
  // (x*y) : x = (y)
  IdealBasis q = ideal_quotient(ideal(vars, {"x*y"}), parse_polynomial("x", vars));
  CHECK(same_ideal(q, ideal(vars, {"y"})));
  // (x^2, x*y) : x = (x, y)
  q = ideal_quotient(ideal(vars, {"x^2", "x*y"}), parse_polynomial("x", vars));
  CHECK(same_ideal(q, ideal(vars, {"x", "y"})));
  // u in I gives the unit ideal
  q = ideal_quotient(ideal(vars, {"x"}), parse_polynomial("x*y", vars));
  CHECK(same_ideal(q, ideal(vars, {"1"})));
}

TEST_CASE("krull dimension and regular sequences") {
  Variables xy({"x", "y"});
  Variables xyz({"x", "y", "z"});
  CHECK(krull_dimension(ideal(xy, {"x", "y"})) == 0);
  CHECK(krull_dimension(ideal(xy, {"1"})) == -1);
  CHECK(krull_dimension(ideal(xyz, {"x*z", "y"})) == 1);
  CHECK(is_regular_sequence(polys(xy, {"x", "y"}), 2));
  CHECK_FALSE(is_regular_sequence(polys(xy, {"x", "x*y"}), 2));
  CHECK(is_regular_sequence(polys(xyz, {"x*z", "y"}), 3));
  CHECK_THROWS_AS(is_regular_sequence(polys(xy, {"x + 1"}), 2), std::invalid_argument);
  CHECK_THROWS_AS(is_regular_sequence({}, 2), std::invalid_argument);
}
