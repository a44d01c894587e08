#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "grasshilb/rational.hpp"

namespace grasshilb {

/// Dense row-major matrix of exact rationals. Empty (0x0, 0xN, Nx0) matrices
/// are valid values.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows,
                                  std::size_t cols_if_empty = 0);
  static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols,
                                     std::size_t rows_if_empty = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::vector<Rational> column(std::size_t c) const;

  RationalMatrix transpose() const;
  /// Rows [first, first + count).
  RationalMatrix row_block(std::size_t first, std::size_t count) const;
  RationalMatrix column_block(std::size_t first, std::size_t count) const;

  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> v);

/// Stack the rows of `top` over the rows of `bottom`; column counts must agree.
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);
RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first row (from the top of the unreduced part) with a
/// nonzero entry, so the output is deterministic.
RowEchelon rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0} as cols x 1 column matrices, one per free column of
/// rref(m), with a 1 in that free position.
std::vector<RationalMatrix> nullspace(const RationalMatrix& m);

/// Square matrices only.
Rational determinant(const RationalMatrix& m);

/// Basis (as rows) of the row space of `m`: the nonzero rows of rref(m).
RationalMatrix row_space_basis(const RationalMatrix& m);

/// Dimension of the intersection of the row spaces of `a` and `b`.
std::size_t intersection_dimension(const RationalMatrix& a, const RationalMatrix& b);

/// Row basis of the intersection of the row spaces of `a` and `b`.
RationalMatrix row_space_intersection(const RationalMatrix& a, const RationalMatrix& b);

/// True when the row spaces of `a` and `b` coincide.
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace grasshilb
