#include <doctest.h>

#include "grasshilb/components.hpp"
#include "grasshilb/error.hpp"
#include "grasshilb/ideal.hpp"

using namespace grasshilb;

namespace {

HilbertPolynomial poly_of(std::initializer_list<Rational> c) { return HilbertPolynomial(c); }

Partition part(std::initializer_list<int> p, int k, int n) { return validate_partition(p, BoxContext(k, n)); }

ErrorKind error_of(int d, int k, int n, int m) {
  try {
    component_count(d, k, n, m);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parameters accepted");
  return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("components") {
  TEST_CASE("hilbert_poly examples") {
    CHECK(hilbert_poly(3, 2) == poly_of({0, 3}));
    CHECK(hilbert_poly(4, 2) == poly_of({-2, 4}));
    CHECK(hilbert_poly(3, 3) == poly_of({1, Rational(3, 2), Rational(3, 2)}));
    CHECK(to_string(hilbert_poly(3, 2)) == "3*T");
    CHECK(to_string(hilbert_poly(4, 2)) == "4*T - 2");
    CHECK(to_string(hilbert_poly(3, 3)) == "(3/2)*T^2 + (3/2)*T + 1");
    CHECK(to_string(HilbertPolynomial()) == "0");
    CHECK(to_string(poly_of({Rational(-1, 2), 0, -1})) == "-T^2 - 1/2");
    CHECK_THROWS_AS(hilbert_poly(0, 2), Error);
    CHECK_THROWS_AS(hilbert_poly(3, 1), Error);
  }

  TEST_CASE("hilbert_poly degree and leading coefficient") {
    for (int m = 2; m <= 6; ++m) {
      Rational factorial = 1;
      for (int i = 2; i < m; ++i) factorial *= i;
      for (int d = 1; d <= 8; ++d) {
        const auto p = hilbert_poly(d, m);
        CHECK(p.degree() == m - 1);
        CHECK(p.coefficients().back() == Rational(d) / factorial);
      }
    }
  }

  TEST_CASE("planar curves") {
    CHECK(planar_curve_poly(3) == poly_of({0, 3}));
    CHECK(planar_curve_poly(4) == poly_of({-2, 4}));
    for (int d = 1; d <= 10; ++d) CHECK(planar_curve_poly(d) == hilbert_poly(d, 2));
  }

  TEST_CASE("polynomial vs Hilbert function of a concrete cubic surface") {
    const auto ideal = HypersurfaceIdealSpec(3, 3, parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", 4)).ideal();
    for (int t = 3; t <= 5; ++t)
      CHECK(hilbert_poly(3, 3).evaluate(t) == static_cast<long>(hilbert_function(ideal, t)));
  }

  TEST_CASE("polynomial and function differ below d - m") {
    for (int n = 2; n <= 6; ++n)
      for (int m = 2; m <= std::min(n, 3); ++m)
        for (int d = 1; d <= 4; ++d) {
          const auto ideal = HypersurfaceIdealSpec(n, m, random_dense_form(static_cast<std::size_t>(m) + 1, d, 77)).ideal();
          const auto p = hilbert_poly(d, m);
          for (int t = 0; t <= d + 4; ++t) {
            const Rational gap = Rational(static_cast<long>(hilbert_function(ideal, t))) - p.evaluate(t);
            if (t >= std::max(0, d - m)) {
              CHECK(gap == 0);
            } else {
              const Rational expected(binomial(d - t - 1, m));
              CHECK(gap == (m % 2 ? -expected : expected));
            }
          }
        }
    // P_{3,2}(0) = 0 while the function is 1.
    CHECK(hilbert_poly(3, 2).evaluate(0) == 0);
  }

  TEST_CASE("mplane_classes examples") {
    const auto both = mplane_classes(3, 8, 3);
    REQUIRE(both.size() == 2);
    CHECK(both[0].family == PlaneFamily::Sub);
    CHECK(both[0].plane_class.partition == part({5, 5, 2}, 3, 8));
    CHECK(both[1].family == PlaneFamily::Quot);
    CHECK(both[1].plane_class.partition == part({4, 4, 4}, 3, 8));
    const auto sub_only = mplane_classes(2, 7, 3);
    REQUIRE(sub_only.size() == 1);
    CHECK(sub_only[0].plane_class.partition == part({5, 2}, 2, 7));
    CHECK(mplane_classes(3, 7, 5).empty());
    CHECK_THROWS_AS(mplane_classes(1, 5, 2), Error);
  }

  TEST_CASE("hypersurface_class examples") {
    const BoxContext g38(3, 8);
    auto h1 = hypersurface_class(SchubertClass{part({5, 5, 2}, 3, 8), g38}, 3).single_term();
    CHECK(h1->first == part({5, 5, 3}, 3, 8));
    CHECK(h1->second == 3);
    auto h2 = hypersurface_class(SchubertClass{part({4, 4, 4}, 3, 8), g38}, 3).single_term();
    CHECK(h2->first == part({5, 4, 4}, 3, 8));
    CHECK(h2->second == 3);
    const BoxContext g24(2, 4);
    for (const auto& c : mplane_classes(2, 4, 2)) {
      auto h = hypersurface_class(c.plane_class, 3).single_term();
      CHECK(h->first == part({2, 1}, 2, 4));
      CHECK(h->second == 3);
    }
    try {
      hypersurface_class(SchubertClass{part({1, 0}, 2, 4), g24}, 3);
      FAIL("non-maximal class accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonMaximalClass);
    }
  }

  TEST_CASE("hypersurface classes are single terms with coefficient d up to n = 8") {
    for (int n = 4; n <= 8; ++n)
      for (int k = 2; k < n - 1; ++k)
        for (int m = 2; m < n; ++m)
          for (const auto& c : mplane_classes(k, n, m))
            for (int d = 3; d <= 5; ++d) {
              const auto h = hypersurface_class(c.plane_class, d).single_term();
              REQUIRE(h.has_value());
              CHECK(h->second == d);
            }
  }

  TEST_CASE("component_count examples") {
    CHECK(component_count(3, 3, 8, 3).count() == 2);
    CHECK(component_count(3, 2, 7, 3).count() == 1);
    CHECK(component_count(3, 3, 7, 5).count() == 0);
    const auto r = component_count(3, 2, 4, 2);
    REQUIRE(r.count() == 2);
    CHECK(r.classes_coincide);
    CHECK(r.components[0].plane_class.partition == part({2, 0}, 2, 4));
    CHECK(r.components[1].plane_class.partition == part({1, 1}, 2, 4));
    for (const auto& c : r.components) {
      CHECK(c.hypersurface_class.single_term()->first == part({2, 1}, 2, 4));
      CHECK(c.dimension == 12);
    }
    CHECK_FALSE(component_count(3, 3, 8, 3).classes_coincide);
    CHECK(error_of(2, 2, 4, 2) == ErrorKind::InvalidParameter);
    CHECK(error_of(3, 2, 4, 1) == ErrorKind::InvalidParameter);
    CHECK(error_of(3, 1, 4, 2) == ErrorKind::InvalidParameter);
  }

  TEST_CASE("trichotomy and duality") {
    for (int n = 4; n <= 10; ++n)
      for (int k = 2; k < n - 1; ++k)
        for (int m = 2; m <= n; ++m) {
          const int count = component_count(3, k, n, m).count();
          CHECK(count == (m <= n - k) + (m <= k));
          CHECK(count == component_count(3, n - k, n, m).count());
        }
  }

  TEST_CASE("flag varieties") {
    CHECK(flag_dimension(1, 4, 4) == 3);
    CHECK(flag_dimension(0, 3, 4) == 3);
    for (int n = 2; n <= 6; ++n)
      for (int a = 0; a < n; ++a) CHECK(flag_dimension(a, n, n) == a * (n - a));
    CHECK_THROWS_AS(flag_dimension(3, 2, 5), Error);
    CHECK_THROWS_AS(flag_dimension(-1, 2, 5), Error);
    CHECK_THROWS_AS(flag_dimension(1, 6, 5), Error);
    CHECK(family_base(PlaneFamily::Sub, 2, 4, 2) == flag_variety(1, 4, 4));
    CHECK(family_base(PlaneFamily::Quot, 2, 4, 2) == flag_variety(0, 3, 4));
    for (PlaneFamily f : {PlaneFamily::Sub, PlaneFamily::Quot}) CHECK(family_base(f, 3, 8, 3).bundle_rank == 4);
  }

  TEST_CASE("bundle dimensions") {
    CHECK(bundle_total_dimension(plane_grassmannian_base(5, 2), 3) == 18);
    CHECK(bundle_total_dimension(flag_variety(1, 4, 4), 3) == 12);
    CHECK(bundle_total_dimension(flag_variety(0, 3, 4), 3) == 12);
    CHECK_THROWS_AS(bundle_total_dimension(flag_variety(0, 2, 4), 3), Error);
    for (int n = 2; n <= 6; ++n)
      for (int m : {2, 3})
        for (int d : {3, 4})
          if (m <= n) CHECK(bundle_total_dimension(plane_grassmannian_base(n, m), d) == tangent_formula(n, m, d));
  }
}
