#include <doctest.h>

#include <random>

#include "grasshilb/error.hpp"
#include "grasshilb/ideal.hpp"

using namespace grasshilb;

namespace {

HomogeneousPoly poly(const char* text, std::size_t nvars) { return parse_polynomial(text, nvars); }

// dim (S/I)_e for a monomial ideal: count the monomials no generator divides.
std::size_t standard_monomials(const std::vector<Monomial>& gens, std::size_t nvars, int e) {
  std::size_t count = 0;
  for (const auto& m : monomials_of_degree(nvars, e)) {
    bool divisible = false;
    for (const auto& g : gens) {
      bool divides = true;
      for (std::size_t i = 0; i < nvars; ++i) divides = divides && g[i] <= m[i];
      divisible = divisible || divides;
    }
    count += !divisible;
  }
  return count;
}

HomogeneousPoly monomial_form(int d, int m) {
  std::vector<int> exps(static_cast<std::size_t>(m) + 1, 0);
  exps[0] = d;
  return HomogeneousPoly::monomial(Monomial(exps));
}

std::int64_t tangent_closed_form(int n, int m, int d) {
  return to_int64(binomial(m + d, m)) - 1 + static_cast<std::int64_t>(n - m) * (m + 1);
}

}  // namespace

TEST_SUITE("ideal") {
  TEST_CASE("hypersurface spec validation") {
    const auto f = poly("x0^3 + x1^3 + x2^3", 3);
    CHECK_NOTHROW(HypersurfaceIdealSpec(4, 2, f));
    CHECK_THROWS_AS(HypersurfaceIdealSpec(1, 2, f), Error);
    CHECK_THROWS_AS(HypersurfaceIdealSpec(4, 1, poly("x0", 2)), Error);
    CHECK_THROWS_AS(HypersurfaceIdealSpec(4, 2, HomogeneousPoly(3, 3)), Error);
    CHECK_THROWS_AS(HypersurfaceIdealSpec(4, 2, poly("x3^2", 5)), Error);
    CHECK_THROWS_AS(HypersurfaceIdealSpec(4, 2, poly("x0^2", 4)), Error);
    const HypersurfaceIdealSpec spec(4, 2, f);
    CHECK(spec.ideal().size() == 3);
    CHECK(spec.form().nvars() == 5);
  }

  TEST_CASE("random dense forms are seeded and dense") {
    const auto f = random_dense_form(3, 3, 7);
    CHECK(f == random_dense_form(3, 3, 7));
    CHECK(f != random_dense_form(3, 3, 8));
    CHECK(f.term_count() == 10);
    for (const auto& [m, c] : f.terms()) CHECK((c != 0 && abs(c) <= 5));
  }

  TEST_CASE("macaulay matrix examples") {
    const GradedIdeal x0(2, {poly("x0", 2)});
    const auto m1 = macaulay_matrix(x0, 1);
    CHECK(m1.rows() == 2);
    CHECK(m1.cols() == 1);
    CHECK(rank(m1) == 1);
    const GradedIdeal both(2, {poly("x0", 2), poly("x1", 2)});
    CHECK(rank(macaulay_matrix(both, 2)) == 3);
    const HypersurfaceIdealSpec spec(4, 2, random_dense_form(3, 3, 5));
    CHECK(rank(macaulay_matrix(spec.ideal(), 2)) == 9);
    CHECK(macaulay_matrix(GradedIdeal(2, {poly("x0^3", 2)}), 2).cols() == 0);
  }

  TEST_CASE("hilbert function examples") {
    const HypersurfaceIdealSpec spec(4, 2, random_dense_form(3, 3, 5));
    CHECK(hilbert_function(spec.ideal(), 2) == 6);
    CHECK(hilbert_function(spec.ideal(), 3) == 9);
    CHECK(hilbert_function(GradedIdeal(3, {}), 2) == 6);
  }

  TEST_CASE("hilbert function of monomial ideals matches standard monomials") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t nvars = 2 + rng() % 3;
      std::vector<Monomial> gens;
      std::vector<HomogeneousPoly> polys;
      const int count = 1 + static_cast<int>(rng() % 4);
      for (int g = 0; g < count; ++g) {
        std::vector<int> exps(nvars);
        int deg = 0;
        while (deg == 0) {
          deg = 0;
          for (auto& x : exps) deg += (x = static_cast<int>(rng() % 3));
        }
        gens.emplace_back(exps);
        polys.push_back(HomogeneousPoly::monomial(gens.back()));
      }
      const GradedIdeal ideal(nvars, polys);
      for (int e = 0; e <= 6; ++e) CHECK(hilbert_function(ideal, e) == standard_monomials(gens, nvars, e));
    }
  }

  TEST_CASE("hilbert function of hypersurface ideals") {
    for (int n = 2; n <= 6; ++n)
      for (int m = 2; m <= std::min(n, 3); ++m)
        for (int d = 1; d <= 4; ++d)
          for (bool dense : {false, true}) {
            const auto form = dense ? random_dense_form(static_cast<std::size_t>(m) + 1, d,
                                                        static_cast<std::uint64_t>(100 * n + 10 * m + d))
                                    : monomial_form(d, m);
            const auto ideal = HypersurfaceIdealSpec(n, m, form).ideal();
            for (int e = 0; e <= d + 4; ++e) {
              const Integer expected = binomial(e + m, m) - binomial(e + m - d, m);
              CHECK(hilbert_function(ideal, e) == to_int64(expected));
            }
          }
  }

  TEST_CASE("quotient basis") {
    const HypersurfaceIdealSpec spec(4, 2, random_dense_form(3, 3, 9));
    const QuotientBasis linear(spec.ideal(), 1);
    REQUIRE(linear.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(linear.monomials()[i] == Monomial::variable(5, i));
    const QuotientBasis cubic(spec.ideal(), 3);
    CHECK(cubic.size() == 9);
    CHECK(cubic.ideal_dimension() + cubic.size() == 35);
    // f reduces to zero and normal forms are idempotent.
    CHECK(cubic.normal_form(spec.form()).is_zero());
    const auto g = random_dense_form(5, 3, 4);
    const auto nf = cubic.normal_form(g);
    CHECK(cubic.normal_form(nf) == nf);
    CHECK(cubic.coordinates(g) == cubic.coordinates(nf));
    CHECK(QuotientBasis(GradedIdeal(2, {poly("x0", 2), poly("x1", 2)}), 2).size() == 0);
  }

  TEST_CASE("syzygy examples") {
    const GradedIdeal both(2, {poly("x0", 2), poly("x1", 2)});
    const auto syz = syzygies_in_degree(both, 2);
    REQUIRE(syz.size() == 1);
    const Rational c = syz[0][0].coefficient(Monomial({0, 1}));
    CHECK(c != 0);
    CHECK(syz[0][0] == poly("x1", 2).scaled(c));
    CHECK(syz[0][1] == poly("x0", 2).scaled(-c));
    for (int e = 0; e <= 5; ++e) CHECK(syzygies_in_degree(GradedIdeal(2, {poly("x0", 2)}), e).empty());
    const HypersurfaceIdealSpec spec(3, 2, random_dense_form(3, 3, 2));
    CHECK(syzygies_in_degree(spec.ideal(), 4).size() == 1);
  }

  TEST_CASE("syzygies multiply back to zero") {
    for (std::uint64_t seed : {1, 2, 3}) {
      const HypersurfaceIdealSpec spec(5, 2, random_dense_form(3, 3, seed));
      const auto ideal = spec.ideal();
      for (int e = 0; e <= 5; ++e) {
        const auto syz = syzygies_in_degree(ideal, e);
        CHECK(syz.size() == macaulay_columns(ideal, e).size() - rank(macaulay_matrix(ideal, e)));
        for (const auto& s : syz) {
          HomogeneousPoly total(ideal.nvars(), e);
          for (std::size_t i = 0; i < s.size(); ++i) total += s[i] * ideal.generators()[i];
          CHECK(total.is_zero());
        }
      }
    }
  }

  TEST_CASE("hom dimension examples") {
    CHECK(hom_dimension(HypersurfaceIdealSpec(5, 2, random_dense_form(3, 3, 7)).ideal(), 5) == 18);
    CHECK(hom_dimension(HypersurfaceIdealSpec(3, 2, random_dense_form(3, 3, 1)).ideal(), 5) == 12);
    // (x0) in Q[x0,x1]: phi(x0) ranges over (S/I)_1 = <x1>.
    CHECK(hom_dimension(GradedIdeal(2, {poly("x0", 2)}), 2) == 1);
    // A linear subspace P^m in P^N: the tangent space to the Grassmannian of m-planes.
    for (int n = 3; n <= 6; ++n)
      for (int m = 1; m < n; ++m) {
        std::vector<HomogeneousPoly> gens;
        for (int i = m + 1; i <= n; ++i) gens.push_back(HomogeneousPoly::variable(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(i)));
        CHECK(hom_dimension(GradedIdeal(static_cast<std::size_t>(n) + 1, gens), 2) ==
              static_cast<std::size_t>((n - m) * (m + 1)));
      }
  }

  TEST_CASE("syzygy constraints can be nontrivial") {
    // I = (x0^2, x0*x1): phi(x0^2) = a x1^2, phi(x0*x1) = b x1^2 and the
    // syzygy x1*g1 - x0*g2 forces a x1^3 = 0 in S/I.
    const GradedIdeal ideal(2, {poly("x0^2", 2), poly("x0*x1", 2)});
    const auto tc = hom_tangent_computation(ideal, 4);
    CHECK(tc.unknowns == 2);
    CHECK(tc.constraint_rank == 1);
    CHECK(tc.dimension() == 1);
  }

  TEST_CASE("hom bound precondition") {
    const GradedIdeal ideal = HypersurfaceIdealSpec(4, 2, random_dense_form(3, 3, 1)).ideal();
    CHECK(required_syzygy_bound(ideal) == 4);
    CHECK(required_syzygy_bound(GradedIdeal(2, {poly("x0^3", 2)})) == 0);
    try {
      hom_dimension(ideal, 3);
      FAIL("bound 3 accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BoundTooSmall);
    }
  }

  TEST_CASE("hom dimension matches the tangent formula") {
    for (int n = 2; n <= 6; ++n)
      for (int m : {2, 3}) {
        if (m > n) continue;
        for (int d : {3, 4})
          for (bool dense : {false, true}) {
            const auto form = dense ? random_dense_form(static_cast<std::size_t>(m) + 1, d,
                                                        static_cast<std::uint64_t>(31 * n + 7 * m + d))
                                    : monomial_form(d, m);
            const auto tc = hom_tangent_computation(HypersurfaceIdealSpec(n, m, form).ideal(), d + 2);
            CHECK(static_cast<std::int64_t>(tc.dimension()) == tangent_closed_form(n, m, d));
            CHECK(tc.constraint_rank == 0);
          }
      }
  }

  TEST_CASE("coprimality and squarefreeness") {
    CHECK(coprime(poly("x0", 2), poly("x1", 2)));
    CHECK_FALSE(coprime(poly("x0*x1", 2), poly("x0^2 + x0*x1", 2)));
    CHECK_FALSE(coprime(poly("x0", 2), HomogeneousPoly(2, 1)));
    CHECK(is_squarefree(poly("x0*x1*x2", 3)));
    CHECK(is_squarefree(poly("x0^3 + x1^3 + x2^3", 3)));
    CHECK_FALSE(is_squarefree(poly("x0^2*x1", 3)));
    CHECK_FALSE(is_squarefree(poly("x0^3 + 2*x0^2*x1 + x0*x1^2", 3)));  // x0 (x0 + x1)^2
    CHECK(is_squarefree(poly("x0^2 - x1^2", 2)));
    CHECK_FALSE(is_squarefree(poly("x0^2 - 2*x0*x1 + x1^2", 2)));
  }
}
