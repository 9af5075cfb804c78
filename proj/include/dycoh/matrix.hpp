#ifndef DYCOH_MATRIX_HPP
#define DYCOH_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dycoh/field.hpp"

namespace dycoh {

// Dense row-major matrix over one ground field.  All entries share the
// field carried by the matrix; mixing fields throws.
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        throw_error(Error::Kind::Dimension, "ragged rows in matrix construction");
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  static Matrix from_columns(const FieldSpec& f, const std::vector<Vec>& cols) {
    std::size_t rows = cols.empty() ? 0 : cols.front().size();
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows)
        throw_error(Error::Kind::Dimension, "ragged columns in matrix construction");
      for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
    }
    return m;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  void set(std::size_t r, std::size_t c, const Scalar& s) {
    if (s.field() != field_)
      throw_error(Error::Kind::FieldMismatch, "matrix entry field mismatch");
    entries_[r * cols_ + c] = s;
  }

  Vec row(std::size_t r) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
  }

  Vec column(std::size_t c) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_)
      throw_error(Error::Kind::Dimension, "matrix-vector dimension mismatch");
    Vec y = vec_zero(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Scalar acc = Scalar::zero(field_);
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!at(r, c).is_zero() && !x[c].is_zero()) acc = acc + at(r, c) * x[c];
      }
      y[r] = acc;
    }
    return y;
  }

  Matrix multiply(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw_error(Error::Kind::Dimension, "matrix product dimension mismatch");
    if (field_ != o.field_)
      throw_error(Error::Kind::FieldMismatch, "matrix product field mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = at(r, k);
        if (a.is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) {
          const Scalar& b = o.at(k, c);
          if (!b.is_zero()) m.at(r, c) = m.at(r, c) + a * b;
        }
      }
    return m;
  }

  Matrix add(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw_error(Error::Kind::Dimension, "matrix sum dimension mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      m.entries_[i] = entries_[i] + o.entries_[i];
    return m;
  }

  // Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const {
    if (rows_ != o.rows_)
      throw_error(Error::Kind::Dimension, "hcat row mismatch");
    Matrix m(field_, rows_, cols_ + o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
    }
    return m;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           entries_ == o.entries_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      s += "[";
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) s += " ";
        s += at(r, c).str();
      }
      s += "]";
    }
    return s;
  }

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

}  // namespace dycoh

#endif
