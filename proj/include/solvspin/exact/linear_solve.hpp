#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "solvspin/exact/matrix.hpp"

namespace solvspin::exact {

template <class S>
using SparseRow = std::vector<std::pair<std::size_t, S>>;

/// Incrementally maintained reduced row echelon form.
///
/// Rows are fed one at a time and reduced against the current pivots; only
/// independent rows are kept, so memory is bounded by rank x columns even for
/// heavily overdetermined systems. Every stored row has a unit pivot and the
/// pivot columns are zero in all other stored rows.
template <FieldScalar S>
class EchelonForm {
 public:
  explicit EchelonForm(std::size_t cols) : cols_(cols), pivot_row_(cols, kNone) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true if the row was independent of the rows seen so far.
  bool add_row(std::span<const S> dense) {
    SparseRow<S> row;
    for (std::size_t j = 0; j < dense.size(); ++j)
      if (!is_zero(dense[j])) row.emplace_back(j, dense[j]);
    return add_sparse(std::move(row));
  }

  /// `row` must be sorted by column with no duplicates.
  bool add_sparse(SparseRow<S> row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    std::size_t pick = 0;
    if constexpr (!ScalarTraits<S>::exact) {
      double best = -1.0;
      for (std::size_t t = 0; t < row.size(); ++t) {
        double mag = ScalarTraits<S>::magnitude(row[t].second);
        if (mag > best) {
          best = mag;
          pick = t;
        }
      }
    }
    std::size_t pc = row[pick].first;
    S inv = S(1) / row[pick].second;
    for (auto& [c, v] : row) v = (c == pc) ? S(1) : v * inv;
    // Clear the new pivot column from the stored rows.
    for (auto& other : rows_) {
      auto it = find_col(other, pc);
      if (it == other.end()) continue;
      S factor = it->second;
      other = axpy(other, -factor, row);
    }
    pivot_row_[pc] = rows_.size();
    pivot_cols_.push_back(pc);
    rows_.push_back(std::move(row));
    return true;
  }

  /// Basis of the null space, one vector per free column. The free column
  /// carries a 1 and the vector's earlier free columns are zero.
  std::vector<Vector<S>> kernel_basis() const {
    std::vector<Vector<S>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (pivot_row_[f] != kNone) continue;
      Vector<S> v(cols_);
      v[f] = S(1);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = find_col(rows_[r], f);
        if (it != rows_[r].end()) v[pivot_cols_[r]] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Reduced form of `row` modulo the stored rows (empty iff in the row space).
  SparseRow<S> reduce(SparseRow<S> row) const {
    std::vector<std::pair<std::size_t, S>> hits;
    for (const auto& [c, v] : row)
      if (pivot_row_[c] != kNone) hits.emplace_back(c, v);
    for (const auto& [c, v] : hits) row = axpy(row, -v, rows_[pivot_row_[c]]);
    return row;
  }

  bool is_pivot(std::size_t col) const { return pivot_row_[col] != kNone; }

  /// Stored rows, in insertion order, with their pivot columns.
  const std::vector<SparseRow<S>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  static typename SparseRow<S>::const_iterator find_col(const SparseRow<S>& r, std::size_t c) {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    return (it != r.end() && it->first == c) ? it : r.end();
  }

  /// a + s*b for sorted sparse rows, dropping entries that cancel.
  static SparseRow<S> axpy(const SparseRow<S>& a, const S& s, const SparseRow<S>& b) {
    SparseRow<S> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, s * b[j].second);
        ++j;
      } else {
        S v = a[i].second + s * b[j].second;
        if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t cols_;
  std::vector<std::size_t> pivot_row_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<SparseRow<S>> rows_;
};

template <FieldScalar S>
EchelonForm<S> echelon(const Matrix<S>& m) {
  EchelonForm<S> e(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.add_row(m.row(i));
  return e;
}

template <FieldScalar S>
std::size_t rank(const Matrix<S>& m) {
  return echelon(m).rank();
}

template <FieldScalar S>
std::vector<Vector<S>> kernel_basis(const Matrix<S>& m) {
  return echelon(m).kernel_basis();
}

/// Some x with A x = b, or nullopt when the system is inconsistent.
template <FieldScalar S>
std::optional<Vector<S>> solve(const Matrix<S>& a, std::span<const S> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const std::size_t n = a.cols();
  EchelonForm<S> e(n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector<S> row = a.row(i);
    row.push_back(b[i]);
    e.add_row(row);
  }
  if (e.is_pivot(n)) return std::nullopt;
  Vector<S> x(n);
  const auto& rows = e.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!row.empty() && row.back().first == n) x[e.pivot_cols()[r]] = row.back().second;
  }
  return x;
}

}  // namespace solvspin::exact
