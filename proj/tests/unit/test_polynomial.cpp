#include <doctest.h>

#include <random>

#include "grasshilb/error.hpp"
#include "grasshilb/polynomial.hpp"
#include "util.hpp"

using namespace grasshilb;

TEST_SUITE("polynomial") {
  TEST_CASE("monomials_of_degree") {
    const auto linear = monomials_of_degree(3, 1);
    REQUIRE(linear.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(linear[i] == Monomial::variable(3, i));
    CHECK(monomials_of_degree(3, 2).size() == 6);
    const auto single = monomials_of_degree(1, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Monomial({5}));
    CHECK(monomials_of_degree(4, 0).size() == 1);
    for (int e = 0; e <= 6; ++e) {
      const auto mons = monomials_of_degree(4, e);
      CHECK(mons.size() == to_int64(binomial(e + 3, 3)));
      for (std::size_t i = 1; i < mons.size(); ++i) CHECK(GrlexDescending{}(mons[i - 1], mons[i]));
    }
  }

  TEST_CASE("grlex order puts x0 first") {
    const GrlexDescending before;
    CHECK(before(Monomial({2, 0}), Monomial({1, 1})));
    CHECK(before(Monomial({1, 1}), Monomial({0, 2})));
    CHECK(before(Monomial({0, 3}), Monomial({2, 0})));
  }

  TEST_CASE("monomial index") {
    const MonomialIndex idx(3, 2);
    CHECK(idx.size() == 6);
    for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.index_of(idx.at(i)) == i);
    CHECK_THROWS_AS(idx.index_of(Monomial({1, 0, 0})), Error);
  }

  TEST_CASE("text form round trip") {
    const auto p = parse_polynomial("3*x0^3 - x1*x2^2 + 1/2*x0*x1*x2", 3);
    CHECK(p.degree() == 3);
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient(Monomial({1, 1, 1})) == Rational(1, 2));
    CHECK(to_string(p) == "3*x0^3 + 1/2*x0*x1*x2 - x1*x2^2");
    CHECK(parse_polynomial(to_string(p), 3) == p);
    CHECK(to_string(HomogeneousPoly(2, 3)) == "0");
    CHECK(parse_polynomial("0", 2, 3).is_zero());
    CHECK(parse_polynomial("x0*x0 - x0^2", 1).is_zero());
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_polynomial("x0^2 + x1", 2), Error);
    CHECK_THROWS_AS(parse_polynomial("x3", 2), Error);
    CHECK_THROWS_AS(parse_polynomial("", 2), Error);
    CHECK_THROWS_AS(parse_polynomial("2*", 2), Error);
    CHECK_THROWS_AS(parse_polynomial("x0 x1", 2), Error);
    CHECK_THROWS_AS(parse_polynomial("x0^2", 2, 3), Error);
  }

  TEST_CASE("arithmetic") {
    const auto a = parse_polynomial("x0 + x1", 2);
    const auto b = parse_polynomial("x0 - x1", 2);
    CHECK(a * b == parse_polynomial("x0^2 - x1^2", 2));
    CHECK(a + b == parse_polynomial("2*x0", 2));
    CHECK((a - a).is_zero());
    CHECK(-a == a.scaled(-1));
    CHECK(a.times(Monomial({0, 2})) == parse_polynomial("x0*x1^2 + x1^3", 2));
    CHECK_THROWS_AS(a + parse_polynomial("x0^2", 2), Error);
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      HomogeneousPoly p(3, 2), q(3, 3);
      for (const auto& m : monomials_of_degree(3, 2)) p.add_term(m, static_cast<long>(rng() % 7) - 3);
      for (const auto& m : monomials_of_degree(3, 3)) q.add_term(m, static_cast<long>(rng() % 7) - 3);
      const auto pt = testutil::random_vector(3, rng);
      CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    }
  }

  TEST_CASE("derivatives and Euler's identity") {
    const auto f = parse_polynomial("x0^3 + 2*x0*x1*x2 - x2^3", 3);
    CHECK(f.derivative(0) == parse_polynomial("3*x0^2 + 2*x1*x2", 3));
    CHECK(f.derivative(1) == parse_polynomial("2*x0*x2", 3));
    HomogeneousPoly euler(3, 3);
    for (std::size_t i = 0; i < 3; ++i) euler += HomogeneousPoly::variable(3, i) * f.derivative(i);
    CHECK(euler == f.scaled(3));
    CHECK(HomogeneousPoly::monomial(Monomial::one(2), 5).derivative(0).is_zero());
  }

  TEST_CASE("extension and support") {
    const auto f = parse_polynomial("x0*x1", 2);
    const auto g = f.extended(4);
    CHECK(g.nvars() == 4);
    CHECK(g.highest_variable() == 1);
    CHECK(HomogeneousPoly(2, 1).highest_variable() == -1);
    CHECK(f.dense(MonomialIndex(2, 2)) == std::vector<Rational>{0, 1, 0});
  }
}
