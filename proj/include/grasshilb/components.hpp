#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grasshilb/grassmannian.hpp"
#include "grasshilb/rational.hpp"
#include "grasshilb/schubert.hpp"

namespace grasshilb {

/// Polynomial in T with rational coefficients; coefficient i multiplies T^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational evaluate(const Rational& t) const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// "(3/2)*T^2 + (3/2)*T + 1", "4*T - 2", "0".
std::string to_string(const HilbertPolynomial& p);

/// C(T+m, m) - C(T+m-d, m), both binomials expanded as degree-m polynomials
/// in T. Agrees with the Hilbert function of a degree-d hypersurface in P^m
/// for T >= max(0, d-m). Requires d >= 1, m >= 2.
HilbertPolynomial hilbert_poly(int d, int m);

/// dT + 1 - C(d-1, 2). Requires d >= 1.
HilbertPolynomial planar_curve_poly(int d);

struct PlaneClassEntry {
  PlaneFamily family;
  SchubertClass plane_class;
};

/// Classes of linear m-planes in G(k, n), Sub first. Requires m >= 2.
std::vector<PlaneClassEntry> mplane_classes(int k, int n, int m);

/// d * sigma_1 * [L]. Throws NonMaximalClass when the Pieri product has more
/// than one term.
ClassSum hypersurface_class(const SchubertClass& plane_class, int d);

struct FlagVarietyDescriptor {
  int a;
  int b;
  int n;
  int dim;
  int bundle_rank;  // b - a

  friend bool operator==(const FlagVarietyDescriptor&, const FlagVarietyDescriptor&) = default;
};

/// a(n-a) + (b-a)(n-b). Requires 0 <= a < b <= n.
int flag_dimension(int a, int b, int n);
FlagVarietyDescriptor flag_variety(int a, int b, int n);

/// Sub: F(k-1, k+m; n); Quot: F(k-m, k+1; n).
FlagVarietyDescriptor family_base(PlaneFamily family, int k, int n, int m);

/// base.dim + C(m+d, m) - 1 with m + 1 = base.bundle_rank >= 3.
std::int64_t bundle_total_dimension(const FlagVarietyDescriptor& base, int d);

/// Dimension of the Grassmannian of m-planes in P^N seen as F(0, m+1; N+1).
FlagVarietyDescriptor plane_grassmannian_base(int ambient_dim, int m);

/// C(m+d, m) - 1 + (N-m)(m+1).
std::int64_t tangent_formula(int ambient_dim, int m, int d);

struct ComponentEntry {
  PlaneFamily family;
  SchubertClass plane_class;
  ClassSum hypersurface_class;
  FlagVarietyDescriptor flag;
  std::int64_t dimension;
};

struct ComponentReport {
  int d;
  int k;
  int n;
  int m;
  std::vector<ComponentEntry> components;
  /// Two components whose hypersurfaces share a class (the m = 2 case).
  bool classes_coincide = false;

  int count() const noexcept { return static_cast<int>(components.size()); }
};

/// Components of the Hilbert scheme of degree-d hypersurfaces in m-planes of
/// G(k, n): one per family admitting an m-plane, i.e. [m <= n-k] + [m <= k].
/// Requires d >= 3, m >= 2, 1 < k < n-1.
ComponentReport component_count(int d, int k, int n, int m);

}  // namespace grasshilb
