#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "derham/poly.hpp"

namespace derham {

// Sparse vector: strictly increasing indices, no zero values.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec sparse_from_dense(const std::vector<Rational>& v);
std::vector<Rational> dense_from_sparse(const SparseVec& v, std::size_t n);
// a + c * b
SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Rational& c);
// sum_k c_k * v_k
SparseVec sparse_linear_combination(const std::vector<std::pair<Rational, const SparseVec*>>& terms);

// Incremental row echelon form over Q. Rows are kept with unit pivots; each row
// carries a history vector that follows every linear combination applied to it.
// Not thread-safe: reduction uses a shared scratch buffer.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns the remainder of v. When coeffs is given it receives c with
  // v = remainder + sum_r c_r row_r, indexed by row id.
  SparseVec reduce(const SparseVec& v, SparseVec* coeffs = nullptr) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Adds v if it is independent of the stored rows and returns its row id.
  // Otherwise returns nullopt and, if dependency is given, stores
  // history - sum_r c_r history_r for the combination that annihilates v.
  std::optional<std::size_t> insert(const SparseVec& v, const SparseVec& history = {},
                                    SparseVec* dependency = nullptr);

  const SparseVec& row(std::size_t id) const { return rows_[id].entries; }
  const SparseVec& history(std::size_t id) const { return rows_[id].history; }
  std::size_t pivot(std::size_t id) const { return rows_[id].pivot; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

 private:
  struct Row {
    std::size_t pivot;
    SparseVec entries;
    SparseVec history;
  };

  SparseVec reduce_impl(const SparseVec& v, SparseVec* coeffs) const;

  std::size_t ncols_;
  std::vector<Row> rows_;
  std::vector<long> pivot_row_;
  mutable std::vector<Rational> work_;
  mutable std::vector<char> queued_;
};

// Dense rational matrix, row major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> column(std::size_t j) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  QMatrix transpose() const;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  bool is_zero() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& a);
// Fraction-free (Bareiss) rank.
std::size_t rank(const QMatrix& a);
// Basis of {x : a x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& a);
// Linearly independent columns of a spanning its column space.
std::vector<std::vector<Rational>> image_basis(const QMatrix& a);
std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b);
// partial followed by the vectors of space_basis that greedily extend it to a
// basis of span(space_basis). Throws if partial is dependent or leaves the span.
std::vector<std::vector<Rational>> extend_basis(const std::vector<std::vector<Rational>>& space_basis,
                                                const std::vector<std::vector<Rational>>& partial);

// Linear map stored by columns.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> columns;

  SparseVec apply(const SparseVec& x) const;
  QMatrix to_dense() const;
};

std::size_t rank(const SparseMatrix& a);
std::vector<SparseVec> kernel_basis(const SparseMatrix& a);
// a * b
SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace derham
