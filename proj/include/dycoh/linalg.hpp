#ifndef DYCOH_LINALG_HPP
#define DYCOH_LINALG_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "dycoh/matrix.hpp"

// Deterministic exact elimination.  Everything below is driven by the
// reduced row echelon form, which is unique, so the dense and sparse
// paths agree entry-for-entry and every downstream basis or solution is
// canonical.

namespace dycoh {

struct LinalgOptions {
  // Constraint systems assembled as triplets are densified below this
  // many cells; larger systems go through the sparse elimination.
  std::size_t dense_cell_cap = std::size_t{1} << 22;
};

struct Echelon {
  FieldSpec field;
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> pivot_cols;       // ascending
  std::vector<std::map<std::size_t, Scalar>> pivot_rows;  // one per pivot, reduced
};

namespace detail {

inline Echelon rref_dense(const Matrix& m) {
  Matrix a = m;
  Echelon ech;
  ech.field = m.field();
  ech.rows = m.rows();
  ech.cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r) {
      if (!a.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = col; c < a.cols(); ++c)
        std::swap(a.at(sel, c), a.at(pivot_row, c));
    Scalar inv = a.at(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c)
      a.at(pivot_row, c) = inv * a.at(pivot_row, c);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      Scalar f = a.at(r, col);
      if (f.is_zero()) continue;
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = a.at(r, c) - f * a.at(pivot_row, c);
    }
    ech.pivot_cols.push_back(col);
    ++pivot_row;
  }
  ech.pivot_rows.resize(ech.pivot_cols.size());
  for (std::size_t i = 0; i < ech.pivot_cols.size(); ++i)
    for (std::size_t c = ech.pivot_cols[i]; c < a.cols(); ++c)
      if (!a.at(i, c).is_zero()) ech.pivot_rows[i].emplace(c, a.at(i, c));
  return ech;
}

using SparseRow = std::map<std::size_t, Scalar>;

inline Echelon rref_sparse(const FieldSpec& field, std::size_t rows, std::size_t cols,
                           std::vector<SparseRow> work) {
  Echelon ech;
  ech.field = field;
  ech.rows = rows;
  ech.cols = cols;
  std::vector<SparseRow> reduced;  // rows with assigned pivots, fully reduced
  std::vector<std::size_t> pivots;
  while (true) {
    // next pivot: smallest leading column among remaining rows
    std::size_t best = work.size();
    std::size_t best_col = cols;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i].empty()) continue;
      if (work[i].begin()->first < best_col) {
        best_col = work[i].begin()->first;
        best = i;
      }
    }
    if (best == work.size()) break;
    SparseRow pivot = std::move(work[best]);
    work[best].clear();
    Scalar inv = pivot.begin()->second.inverse();
    for (auto& [c, v] : pivot) v = inv * v;
    auto eliminate = [&](SparseRow& row) {
      auto it = row.find(best_col);
      if (it == row.end()) return;
      Scalar f = it->second;
      for (const auto& [c, v] : pivot) {
        auto jt = row.find(c);
        if (jt == row.end()) {
          Scalar nv = -(f * v);
          if (!nv.is_zero()) row.emplace(c, nv);
        } else {
          jt->second = jt->second - f * v;
          if (jt->second.is_zero()) row.erase(jt);
        }
      }
    };
    for (auto& row : work) eliminate(row);
    for (auto& row : reduced) eliminate(row);
    reduced.push_back(std::move(pivot));
    pivots.push_back(best_col);
  }
  // order rows by pivot column
  std::vector<std::size_t> order(pivots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  for (std::size_t i : order) {
    ech.pivot_cols.push_back(pivots[i]);
    ech.pivot_rows.push_back(std::move(reduced[i]));
  }
  return ech;
}

}  // namespace detail

inline Echelon rref(const Matrix& m) { return detail::rref_dense(m); }

inline std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

// Canonical kernel basis read off the RREF: one vector per free
// column, 1 in the free slot, minus the pivot-row entries above it.
inline std::vector<Vec> kernel_basis_from(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < e.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v = vec_zero(e.field, e.cols);
    v[free_col] = Scalar::one(e.field);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
      auto it = e.pivot_rows[i].find(free_col);
      if (it != e.pivot_rows[i].end()) v[e.pivot_cols[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<Vec> kernel_basis(const Matrix& m) {
  return kernel_basis_from(rref(m));
}

// Particular solution of a x = b with free variables set to zero, read
// off the RREF of [a|b]; nullopt when inconsistent.
inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows())
    throw_error(Error::Kind::Dimension, "solve: right-hand side length mismatch");
  Matrix aug = a.hcat(Matrix::from_columns(a.field(), {b}));
  Echelon e = rref(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols()) return std::nullopt;
  Vec x = vec_zero(a.field(), a.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    auto it = e.pivot_rows[i].find(a.cols());
    if (it != e.pivot_rows[i].end()) x[e.pivot_cols[i]] = it->second;
  }
  return x;
}

// Simultaneous solve against many right-hand sides (columns of b);
// nullopt if any column is inconsistent.  One elimination total.
inline std::optional<Matrix> solve_many(const Matrix& a, const Matrix& b) {
  if (b.rows() != a.rows())
    throw_error(Error::Kind::Dimension, "solve_many: right-hand side row mismatch");
  Matrix aug = a.hcat(b);
  Echelon e = rref(aug);
  for (std::size_t c : e.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    for (auto it = e.pivot_rows[i].upper_bound(a.cols() - 1); it != e.pivot_rows[i].end(); ++it)
      x.at(e.pivot_cols[i], it->first - a.cols()) = it->second;
  return x;
}

inline bool in_span(const Matrix& columns, const Vec& v) {
  return solve(columns, v).has_value();
}

// Sparse triplet assembly for constraint systems.  Duplicate cells sum.
class Triplets {
 public:
  Triplets(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols) {}

  void add(std::size_t r, std::size_t c, const Scalar& v) {
    if (v.field() != field_)
      throw_error(Error::Kind::FieldMismatch, "triplet entry field mismatch");
    if (r >= rows_ || c >= cols_)
      throw_error(Error::Kind::Dimension, "triplet index out of range");
    if (!v.is_zero()) data_.emplace_back(r, c, v);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }
  std::size_t nnz() const { return data_.size(); }

  Matrix to_dense() const {
    Matrix m(field_, rows_, cols_);
    for (const auto& [r, c, v] : data_) m.at(r, c) = m.at(r, c) + v;
    return m;
  }

  std::vector<detail::SparseRow> to_rows() const {
    std::vector<detail::SparseRow> rows(rows_);
    for (const auto& [r, c, v] : data_) {
      auto it = rows[r].find(c);
      if (it == rows[r].end()) {
        if (!v.is_zero()) rows[r].emplace(c, v);
      } else {
        it->second = it->second + v;
        if (it->second.is_zero()) rows[r].erase(it);
      }
    }
    return rows;
  }

  Echelon echelon(const LinalgOptions& opts = {}) const {
    if (rows_ * cols_ <= opts.dense_cell_cap) return detail::rref_dense(to_dense());
    return detail::rref_sparse(field_, rows_, cols_, to_rows());
  }

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> data_;
};

}  // namespace dycoh

#endif
