#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grasshilb/matrix.hpp"
#include "grasshilb/polynomial.hpp"
#include "grasshilb/schubert.hpp"

namespace grasshilb {

/// G(k, n) in its Plücker embedding into P^N, N = C(n, k) - 1. Coordinates
/// are indexed by the k-subsets of {0..n-1} in lexicographic order.
class GrassmannianContext {
 public:
  GrassmannianContext(int k, int n);

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  /// N
  int projective_dim() const noexcept { return static_cast<int>(subsets_.size()) - 1; }
  std::size_t coordinate_count() const noexcept { return subsets_.size(); }
  const std::vector<std::vector<int>>& subsets() const noexcept { return subsets_; }
  /// Position of a sorted subset; throws when absent.
  std::size_t index_of(std::span<const int> sorted_subset) const;
  BoxContext box() const { return BoxContext(k_, n_); }
  /// "p_13" (1-based indices; comma separated once n > 9).
  std::string coordinate_name(std::size_t index) const;

 private:
  int k_;
  int n_;
  std::vector<std::vector<int>> subsets_;
  std::map<std::vector<int>, std::size_t> position_;
};

/// Basis v_1..v_n of Q^n as the rows of an invertible matrix; F_i is spanned
/// by the first i rows.
class FlagBasis {
 public:
  explicit FlagBasis(RationalMatrix vectors);
  static FlagBasis standard(int n);
  /// Seeded flag with small integer entries (retries until invertible).
  static FlagBasis random(int n, std::uint64_t seed);

  int n() const noexcept { return static_cast<int>(vectors_.rows()); }
  const RationalMatrix& vectors() const noexcept { return vectors_; }
  /// Rows spanning F_i.
  RationalMatrix subspace(int i) const { return vectors_.row_block(0, static_cast<std::size_t>(i)); }

 private:
  RationalMatrix vectors_;
};

/// The two maximal families of linear spaces in G(k, n):
///   Sub:  k-planes V with W ⊂ V ⊂ U, dim W = k-1, dim U = k+m;
///   Quot: k-planes V with W ⊂ V ⊂ U, dim W = k-m, dim U = k+1.
enum class PlaneFamily { Sub, Quot };

std::string_view to_string(PlaneFamily family);
PlaneFamily parse_plane_family(std::string_view text);

/// Whether an m-plane of this family fits in G(k, n) (Sub: m <= n-k,
/// Quot: m <= k).
bool family_admits(PlaneFamily family, int k, int n, int m);

/// Sub: sigma((n-k)^{k-1}, n-k-m); Quot: sigma((n-k)^{k-m}, (n-k-1)^m).
Partition family_plane_class(PlaneFamily family, int m, const BoxContext& box);

class PlaneFamilySpec {
 public:
  /// Requires m >= 2 and family_admits(family, k, n, m).
  PlaneFamilySpec(PlaneFamily family, int m, FlagBasis flag, GrassmannianContext context);

  PlaneFamily family() const noexcept { return family_; }
  int m() const noexcept { return m_; }
  const FlagBasis& flag() const noexcept { return flag_; }
  const GrassmannianContext& context() const noexcept { return context_; }

 private:
  PlaneFamily family_;
  int m_;
  FlagBasis flag_;
  GrassmannianContext context_;
};

/// Projective point; at least one coordinate is nonzero.
class PluckerPoint {
 public:
  explicit PluckerPoint(std::vector<Rational> coords);
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  /// Equal as projective points.
  bool proportional_to(const PluckerPoint& other) const;

 private:
  std::vector<Rational> coords_;
};

/// Coordinate J is the k x k minor of M on columns J. Throws RankDeficient.
PluckerPoint plucker_embed(const RationalMatrix& m, const GrassmannianContext& ctx);

/// The quadratic relations sum_t (-1)^t p_{A+b_t} p_{B-b_t} over all
/// (k-1)-subsets A and (k+1)-subsets B, each scaled so its grlex-leading
/// coefficient is 1, with zero and repeated relations removed. Polynomials are
/// in the N+1 Plücker coordinates.
std::vector<HomogeneousPoly> plucker_relations(const GrassmannianContext& ctx);

bool on_grassmannian(const PluckerPoint& p, const GrassmannianContext& ctx);
bool on_grassmannian(const PluckerPoint& p, std::span<const HomogeneousPoly> relations);

/// Basis (rows) of {v : v ∧ ω = 0} for the k-vector ω with coordinates p.
/// Throws NotOnGrassmannian when that space is not k-dimensional.
RationalMatrix plane_from_plucker(const PluckerPoint& p, const GrassmannianContext& ctx);

/// Linear map P^m -> P^N as an (N+1) x (m+1) matrix.
///   Sub:  column j = v_1 ∧ ... ∧ v_{k-1} ∧ v_{k+j}.
///   Quot: column j = (-1)^j v_1 ∧ ... ∧ v_{k-m} ∧ u_0 ∧ .. û_j .. ∧ u_m with
///         u_i = v_{k-m+1+i}; the point with parameters α is the k-plane
///         F_{k-m} + ker(α) inside F_{k+1}.
RationalMatrix parametrize_plane(const PlaneFamilySpec& spec);

/// plane * params.
PluckerPoint point_on_plane(const RationalMatrix& plane, std::span<const Rational> params);

/// Exact containment of the projective plane in G(k, n): each relation q
/// vanishes identically on it iff q(c_i) = 0 and q(c_i + c_j) = 0 for all
/// columns c_i, c_j.
bool plane_in_grassmannian(const RationalMatrix& plane, const GrassmannianContext& ctx);

/// dim(V ∩ F_{n-k+i-a_i}) >= i for i = 1..k. Throws RankDeficient.
bool schubert_membership(const RationalMatrix& v, const Partition& a, const FlagBasis& flag);

struct PlaneClassification {
  PlaneFamily family;
  SchubertClass plane_class;
  RationalMatrix common;  // rows spanning W, the intersection of all k-planes
  RationalMatrix span;    // rows spanning U, their sum
};

/// Recovers the family of a linear m-plane (m >= 2) contained in G(k, n) by
/// intersecting and summing the k-planes at m+2 sample points (the unit
/// parameters and the all-ones parameter), adding seeded random points up to
/// 2(m+2) if neither signature has appeared.
/// Throws NotOnGrassmannian when the plane leaves G(k, n) and
/// UnclassifiablePlane when no signature matches.
PlaneClassification classify_plane(const RationalMatrix& plane, const GrassmannianContext& ctx,
                                   std::uint64_t seed = 0x5eed);

/// Projective span of {form = 0} inside the plane: the common zeros of the
/// linear forms on P^N whose pullback lies in (form). Returned as columns.
/// Requires deg form >= 2 and form squarefree.
RationalMatrix span_of_hypersurface(const RationalMatrix& plane, const HomogeneousPoly& form);

/// Column spaces coincide.
bool same_column_space(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace grasshilb
