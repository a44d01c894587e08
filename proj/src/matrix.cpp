#include "grasshilb/matrix.hpp"

#include <utility>

#include "grasshilb/error.hpp"

namespace grasshilb {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows,
                                         std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "ragged row list");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rational>>& cols,
                                            std::size_t rows_if_empty) {
  return from_rows(cols, rows_if_empty).transpose();
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error(ErrorKind::DimensionMismatch, "row block out of range");
  RationalMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  return out;
}

RationalMatrix RationalMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) {
    throw Error(ErrorKind::DimensionMismatch, "column block out of range");
  }
  RationalMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : entries_)
    if (!grasshilb::is_zero(q)) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Rational& x = a(i, l);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!is_zero(b(l, j))) out(i, j) += x * b(l, j);
      }
    }
  }
  return out;
}

std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(v[j]) && !is_zero(a(i, j))) out[i] += a(i, j) * v[j];
  return out;
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::DimensionMismatch, "vstack widths");
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
  return out;
}

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right) {
  return vstack(left.transpose(), right.transpose()).transpose();
}

RowEchelon rref(const RationalMatrix& m) {
  RowEchelon out{m, {}};
  RationalMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && is_zero(a(r, c))) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(r, j), a(pivot_row, j));
    }
    // Normalize the pivot row so the pivot is 1; keeps entries gcd-reduced.
    const Rational inv = 1 / a(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) {
      if (!is_zero(a(pivot_row, j))) a(pivot_row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || is_zero(a(i, c))) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!is_zero(a(pivot_row, j))) a(i, j) -= factor * a(pivot_row, j);
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalMatrix> nullspace(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RationalMatrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalMatrix v(m.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      v(e.pivots[r], 0) = -e.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && is_zero(a(r, c))) ++r;
    if (r == n) return 0;
    if (r != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(r, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      const Rational factor = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return det;
}

RationalMatrix row_space_basis(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  return e.reduced.row_block(0, e.pivots.size());
}

std::size_t intersection_dimension(const RationalMatrix& a, const RationalMatrix& b) {
  return rank(a) + rank(b) - rank(vstack(a, b));
}

RationalMatrix row_space_intersection(const RationalMatrix& a, const RationalMatrix& b) {
  // x A = y B  <=>  [x, -y] [A; B] = 0; the intersection is {x A}.
  const RationalMatrix ba = row_space_basis(a);
  const RationalMatrix bb = row_space_basis(b);
  if (ba.rows() == 0 || bb.rows() == 0) return RationalMatrix(0, a.cols());
  const RationalMatrix stacked = vstack(ba, bb);
  const auto kernel = nullspace(stacked.transpose());
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : kernel) {
    std::vector<Rational> combo(a.cols());
    for (std::size_t i = 0; i < ba.rows(); ++i) {
      if (is_zero(v(i, 0))) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) combo[j] += v(i, 0) * ba(i, j);
    }
    rows.push_back(std::move(combo));
  }
  return row_space_basis(RationalMatrix::from_rows(rows, a.cols()));
}

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(vstack(a, b));
}

}  // namespace grasshilb
