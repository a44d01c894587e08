#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "grasshilb/rational.hpp"

namespace grasshilb {

/// Sorted (index, value) pairs with no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incrementally built echelon basis of a subspace of Q^dimension.
///
/// Every stored row has its pivot at its first nonzero index, scaled to 1,
/// and no two rows share a pivot. The pivot set therefore equals the set of
/// leading positions of the spanned subspace, independent of insertion order.
///
/// With relation tracking enabled, each row remembers how it was formed from
/// the inserted vectors (by caller-supplied label). An insert that reduces to
/// zero yields a relation: a sparse vector over labels that sums the inserted
/// vectors to zero. The relations collected this way form a basis of the
/// kernel of the map label -> inserted vector.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dimension, bool track_relations = false);

  /// Returns true when `v` enlarged the span.
  bool insert(SparseVector v, std::size_t label = 0);

  /// Remainder of `v` after eliminating every pivot position. Two vectors are
  /// congruent modulo the span iff their remainders agree.
  SparseVector reduce(SparseVector v) const;

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_pivot(std::size_t index) const { return row_of_pivot_[index] != kNone; }
  /// Indices that are not pivots, increasing.
  std::vector<std::size_t> free_positions() const;

  const std::vector<SparseVector>& relations() const noexcept { return relations_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Row {
    SparseVector entries;
    SparseVector combination;  // over insert labels
  };

  void eliminate(SparseVector& v, SparseVector* combination) const;

  std::size_t dimension_;
  bool track_;
  std::vector<Row> rows_;
  std::vector<std::size_t> row_of_pivot_;
  std::vector<SparseVector> relations_;
};

/// Dense <-> sparse conversions.
SparseVector to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVector& v, std::size_t dimension);

/// a + factor * b, both sorted.
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

}  // namespace grasshilb
