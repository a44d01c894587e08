#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grasshilb/echelon.hpp"
#include "grasshilb/matrix.hpp"
#include "grasshilb/polynomial.hpp"

namespace grasshilb {

/// Ideal of S = Q[x_0..x_V] given by nonzero homogeneous generators.
class GradedIdeal {
 public:
  GradedIdeal(std::size_t nvars, std::vector<HomogeneousPoly> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<HomogeneousPoly>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  int generator_degree(std::size_t i) const { return generators_[i].degree(); }

 private:
  std::size_t nvars_;
  std::vector<HomogeneousPoly> generators_;
};

/// I = (f(x_0..x_m), x_{m+1}, ..., x_N): a degree-d hypersurface in the
/// coordinate m-plane of P^N.
class HypersurfaceIdealSpec {
 public:
  /// `form` may be given in m+1 or N+1 variables; it must be nonzero,
  /// homogeneous of degree >= 1, and only use x_0..x_m. Requires 2 <= m <= N.
  HypersurfaceIdealSpec(int ambient_dim, int plane_dim, HomogeneousPoly form);

  int ambient_dim() const noexcept { return ambient_dim_; }
  int plane_dim() const noexcept { return plane_dim_; }
  int degree() const noexcept { return form_.degree(); }
  /// The form in N+1 variables.
  const HomogeneousPoly& form() const noexcept { return form_; }
  GradedIdeal ideal() const;

 private:
  int ambient_dim_;
  int plane_dim_;
  HomogeneousPoly form_;
};

/// Seeded form with every coefficient a nonzero integer in [-magnitude,
/// magnitude]. The coefficient stream comes straight from mt19937_64 output,
/// so a seed gives the same form on every platform.
HomogeneousPoly random_dense_form(std::size_t nvars, int degree, std::uint64_t seed,
                                  int magnitude = 5);

/// Column j of the Macaulay matrix is generator `generator` times `multiplier`.
struct MacaulayColumn {
  std::size_t generator;
  Monomial multiplier;
};

/// Column layout for degree e: generators in order, multipliers in
/// monomials_of_degree order. Generators of degree > e contribute nothing.
std::vector<MacaulayColumn> macaulay_columns(const GradedIdeal& ideal, int degree);

/// Matrix of (h_i) -> sum h_i g_i into S_e; rows follow
/// monomials_of_degree(V+1, e), columns follow macaulay_columns.
RationalMatrix macaulay_matrix(const GradedIdeal& ideal, int degree);

/// Coordinates on (S/I)_e. The basis is the set of degree-e monomials that
/// are not leading monomials of I_e (grlex), i.e. the complement of the pivot
/// rows of the Macaulay matrix.
class QuotientBasis {
 public:
  QuotientBasis(const GradedIdeal& ideal, int degree);

  int degree() const noexcept { return index_.degree(); }
  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return basis_; }
  /// dim I_e.
  std::size_t ideal_dimension() const noexcept { return ideal_part_.rank(); }

  /// Coordinates of p mod I_e in the basis.
  std::vector<Rational> coordinates(const HomogeneousPoly& p) const;
  /// The representative of p mod I_e supported on basis monomials.
  HomogeneousPoly normal_form(const HomogeneousPoly& p) const;

 private:
  SparseVector reduce(const HomogeneousPoly& p) const;

  MonomialIndex index_;
  EchelonBasis ideal_part_;
  std::vector<Monomial> basis_;
  std::vector<std::size_t> coordinate_of_position_;
};

/// dim (S/I)_e = C(e+V, V) - rank(macaulay_matrix(I, e)).
std::size_t hilbert_function(const GradedIdeal& ideal, int degree);

/// One syzygy: h_i per generator, deg h_i = e - deg g_i, with sum h_i g_i = 0.
using Syzygy = std::vector<HomogeneousPoly>;

/// Basis of the degree-e syzygies, i.e. of the kernel of the Macaulay matrix.
std::vector<Syzygy> syzygies_in_degree(const GradedIdeal& ideal, int degree);

/// max over generator pairs i < j of deg g_i + deg g_j; 0 with fewer than two
/// generators.
int required_syzygy_bound(const GradedIdeal& ideal);

struct TangentComputation {
  std::size_t unknowns = 0;
  std::size_t constraint_rank = 0;
  std::size_t syzygies = 0;  // syzygy basis elements examined, all degrees
  std::size_t dimension() const noexcept { return unknowns - constraint_rank; }
};

/// Degree-0 homomorphisms I -> S/I by brute force: one free element of
/// (S/I)_{deg g_i} per generator, constrained by every syzygy of degree <=
/// `bound` to satisfy sum h_i phi(g_i) = 0 in S/I.
///
/// Exact for ideals generated by a regular sequence (the Koszul syzygies live
/// in degrees <= required_syzygy_bound); for other ideals the answer is an
/// upper bound on dim Hom_S(I, S/I)_0. Throws Error(BoundTooSmall) when
/// `bound` < required_syzygy_bound(ideal).
TangentComputation hom_tangent_computation(const GradedIdeal& ideal, int bound);
std::size_t hom_dimension(const GradedIdeal& ideal, int bound);

/// True when f and g share no nonconstant factor: the pair has no syzygy in
/// degree deg f + deg g - 1. A zero g counts as sharing f.
bool coprime(const HomogeneousPoly& f, const HomogeneousPoly& g);

/// Squarefree test over Q. f is squarefree iff gcd(f, D_c f) = 1 for some
/// directional derivative D_c; c runs over the moment curve (1, t, ..., t^V)
/// for t = 0 .. deg(f) * V, which must contain a good direction because each
/// irreducible factor rules out at most V points of the curve.
bool is_squarefree(const HomogeneousPoly& f);

}  // namespace grasshilb
