#pragma once

// Dense exact linear algebra over Q.

#include <lmweyl/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lmweyl {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rat> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rat> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends a row; the first row fixes the column count when the matrix is empty.
  void append_row(std::span<const Rat> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  std::vector<Rat> apply(std::span<const Rat> v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Rat> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Reduced row echelon form: `reduced` holds the nonzero rows only, each with
/// a leading 1 in column `pivots[i]` and zeros elsewhere in pivot columns.
struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

namespace detail {

// Gauss-Jordan on a list of rows. Pivot = first nonzero entry in column order
// among the remaining rows.
inline Echelon gauss_jordan(std::vector<std::vector<Rat>> rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  Rat factor;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pick = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pick = r;
        break;
      }
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    auto& prow = rows[rank];
    if (prow[col] != 1) {
      Rat inv = 1 / prow[col];
      for (std::size_t c = col; c < cols; ++c)
        if (prow[c] != 0) prow[c] *= inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t c = col + 1; c < cols; ++c)
      if (prow[c] != 0) support.push_back(c);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      factor = rows[r][col];
      rows[r][col] = 0;
      for (std::size_t c : support) rows[r][c] -= factor * prow[c];
    }
    pivots.push_back(col);
    ++rank;
  }
  QMatrix reduced(rank, cols);
  for (std::size_t r = 0; r < rank; ++r)
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = std::move(rows[r][c]);
  return {std::move(reduced), std::move(pivots)};
}

inline std::vector<std::vector<Rat>> to_rows(const QMatrix& m) {
  std::vector<std::vector<Rat>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    bool nonzero = false;
    for (const auto& v : src) nonzero = nonzero || v != 0;
    if (nonzero) rows.emplace_back(src.begin(), src.end());
  }
  return rows;
}

}  // namespace detail

inline Echelon rref(const QMatrix& m) { return detail::gauss_jordan(detail::to_rows(m), m.cols()); }

/// Rank over Q by forward elimination.
inline std::size_t rank(const QMatrix& m) {
  auto rows = detail::to_rows(m);
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  Rat factor;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pick = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pick = r;
        break;
      }
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const auto& prow = rows[rank];
    std::vector<std::size_t> support;
    for (std::size_t c = col + 1; c < cols; ++c)
      if (prow[c] != 0) support.push_back(c);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      factor = rows[r][col] / prow[col];
      rows[r][col] = 0;
      for (std::size_t c : support) rows[r][c] -= factor * prow[c];
    }
    ++rank;
  }
  return rank;
}

/// Basis of {v : m v = 0}. One vector per free column, in increasing column
/// order, with that free entry set to 1 and the other free entries 0.
inline std::vector<std::vector<Rat>> nullspace(const QMatrix& m) {
  Echelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lmweyl
