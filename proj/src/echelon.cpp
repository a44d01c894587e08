#include "grasshilb/echelon.hpp"

#include <algorithm>

#include "grasshilb/error.hpp"

namespace grasshilb {

EchelonBasis::EchelonBasis(std::size_t dimension, bool track_relations)
    : dimension_(dimension), track_(track_relations), row_of_pivot_(dimension, kNone) {}

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      Rational sum = ia->second + factor * ib->second;
      if (!is_zero(sum)) out.emplace_back(ia->first, std::move(sum));
      ++ia;
      ++ib;
    }
  }
  return out;
}

void EchelonBasis::eliminate(SparseVector& v, SparseVector* combination) const {
  // Walk positions left to right; subtracting a row only touches positions at
  // or after its pivot, so one pass clears every pivot position.
  std::size_t cursor = 0;
  while (cursor < v.size()) {
    const std::size_t index = v[cursor].first;
    const std::size_t row = row_of_pivot_[index];
    if (row == kNone) {
      ++cursor;
      continue;
    }
    const Rational factor = -v[cursor].second;
    v = axpy(v, factor, rows_[row].entries);
    if (combination != nullptr) {
      *combination = axpy(*combination, factor, rows_[row].combination);
    }
    // Position `index` is now zero and removed; entries before it unchanged.
  }
}

bool EchelonBasis::insert(SparseVector v, std::size_t label) {
  for (const auto& [index, value] : v) {
    if (index >= dimension_) throw Error(ErrorKind::DimensionMismatch, "sparse index out of range");
    (void)value;
  }
  SparseVector combination;
  if (track_) combination.emplace_back(label, Rational(1));
  eliminate(v, track_ ? &combination : nullptr);

  if (v.empty()) {
    if (track_) relations_.push_back(std::move(combination));
    return false;
  }
  const Rational inv = 1 / v.front().second;
  for (auto& entry : v) entry.second *= inv;
  if (track_) {
    for (auto& entry : combination) entry.second *= inv;
  }
  row_of_pivot_[v.front().first] = rows_.size();
  rows_.push_back(Row{std::move(v), std::move(combination)});
  return true;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  eliminate(v, nullptr);
  return v;
}

std::vector<std::size_t> EchelonBasis::free_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dimension_; ++i)
    if (row_of_pivot_[i] == kNone) out.push_back(i);
  return out;
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) out.emplace_back(i, dense[i]);
  return out;
}

std::vector<Rational> to_dense(const SparseVector& v, std::size_t dimension) {
  std::vector<Rational> out(dimension);
  for (const auto& [index, value] : v) out.at(index) = value;
  return out;
}

}  // namespace grasshilb
