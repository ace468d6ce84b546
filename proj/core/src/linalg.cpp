#include "derham/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "derham/errors.hpp"

namespace derham {

SparseVec sparse_from_dense(const std::vector<Rational>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

std::vector<Rational> dense_from_sparse(const SparseVec& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& [i, a] : v) out[i] = a;
  return out;
}

SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rational s = a[i].second + c * b[j].second;
      if (sgn(s) != 0) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  SparseVec out(a);
  for (auto& e : out) e.second *= c;
  return out;
}

SparseVec sparse_linear_combination(const std::vector<std::pair<Rational, const SparseVec*>>& terms) {
  std::vector<std::pair<std::size_t, Rational>> all;
  for (const auto& [c, v] : terms)
    for (const auto& [i, a] : *v) all.emplace_back(i, c * a);
  std::sort(all.begin(), all.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec out;
  for (auto& [i, a] : all) {
    if (!out.empty() && out.back().first == i)
      out.back().second += a;
    else
      out.emplace_back(i, std::move(a));
  }
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  return out;
}

Echelon::Echelon(std::size_t ncols)
    : ncols_(ncols), pivot_row_(ncols, -1), work_(ncols), queued_(ncols, 0) {}

SparseVec Echelon::reduce_impl(const SparseVec& v, SparseVec* coeffs) const {
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
  for (const auto& [j, a] : v) {
    if (j >= ncols_) throw InvariantViolation("Echelon: column index out of range");
    work_[j] = a;
    queued_[j] = 1;
    heap.push(j);
  }
  SparseVec rem;
  Rational f, t;
  while (!heap.empty()) {
    std::size_t j = heap.top();
    heap.pop();
    queued_[j] = 0;
    if (sgn(work_[j]) == 0) continue;
    long r = pivot_row_[j];
    if (r < 0) {
      rem.emplace_back(j, 0);
      swap(rem.back().second, work_[j]);
      continue;
    }
    swap(f, work_[j]);
    work_[j] = 0;
    const SparseVec& row = rows_[static_cast<std::size_t>(r)].entries;
    for (std::size_t k = 1; k < row.size(); ++k) {
      std::size_t jj = row[k].first;
      if (!queued_[jj]) {
        queued_[jj] = 1;
        heap.push(jj);
      }
      t = f * row[k].second;
      work_[jj] -= t;
    }
    if (coeffs) coeffs->emplace_back(static_cast<std::size_t>(r), f);
  }
  if (coeffs)
    std::sort(coeffs->begin(), coeffs->end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  return rem;
}

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* coeffs) const {
  if (coeffs) coeffs->clear();
  return reduce_impl(v, coeffs);
}

std::optional<std::size_t> Echelon::insert(const SparseVec& v, const SparseVec& history,
                                           SparseVec* dependency) {
  SparseVec coeffs;
  SparseVec rem = reduce_impl(v, &coeffs);
  std::vector<std::pair<Rational, const SparseVec*>> parts;
  parts.emplace_back(Rational(1), &history);
  for (const auto& [r, c] : coeffs)
    if (!rows_[r].history.empty()) parts.emplace_back(-c, &rows_[r].history);
  SparseVec hist = parts.size() == 1 ? history : sparse_linear_combination(parts);
  if (rem.empty()) {
    if (dependency) *dependency = std::move(hist);
    return std::nullopt;
  }
  Rational inv = 1 / rem.front().second;
  for (auto& e : rem) e.second *= inv;
  for (auto& e : hist) e.second *= inv;
  std::size_t id = rows_.size();
  pivot_row_[rem.front().first] = static_cast<long>(id);
  rows_.push_back(Row{rem.front().first, std::move(rem), std::move(hist)});
  return id;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<Rational> QMatrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& x) const {
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const QMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<mpz_class> m(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * cols + j]; };
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        at(i, j) = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& a) {
  QMatrix r = a;
  auto pivots = rref(r);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(a.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(i, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<std::vector<Rational>> image_basis(const QMatrix& a) {
  QMatrix r = a;
  std::vector<std::vector<Rational>> out;
  for (auto p : rref(r)) out.push_back(a.column(p));
  return out;
}

std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw ValidationError("solve: dimension mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::vector<std::vector<Rational>> extend_basis(const std::vector<std::vector<Rational>>& space_basis,
                                                const std::vector<std::vector<Rational>>& partial) {
  std::size_t n = !space_basis.empty() ? space_basis.front().size() : partial.empty() ? 0 : partial.front().size();
  Echelon span(n);
  for (const auto& b : space_basis) span.insert(sparse_from_dense(b));
  Echelon e(n);
  std::vector<std::vector<Rational>> out;
  for (const auto& v : partial) {
    if (v.size() != n) throw ValidationError("extend_basis: dimension mismatch");
    if (!span.contains(sparse_from_dense(v))) throw ValidationError("extend_basis: partial vector outside the space");
    if (!e.insert(sparse_from_dense(v))) throw ValidationError("extend_basis: partial vectors are dependent");
    out.push_back(v);
  }
  for (const auto& b : space_basis)
    if (e.insert(sparse_from_dense(b))) out.push_back(b);
  return out;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  std::vector<std::pair<Rational, const SparseVec*>> parts;
  for (const auto& [j, a] : x) parts.emplace_back(a, &columns[j]);
  return sparse_linear_combination(parts);
}

QMatrix SparseMatrix::to_dense() const {
  QMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, a] : columns[j]) m(i, j) = a;
  return m;
}

std::size_t rank(const SparseMatrix& a) {
  Echelon e(a.rows);
  for (const auto& c : a.columns) e.insert(c);
  return e.rank();
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& a) {
  Echelon e(a.rows);
  std::vector<SparseVec> out;
  for (std::size_t j = 0; j < a.cols; ++j) {
    SparseVec dep;
    if (!e.insert(a.columns[j], SparseVec{{j, Rational(1)}}, &dep)) out.push_back(std::move(dep));
  }
  return out;
}

SparseMatrix compose(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix c{a.rows, b.cols, {}};
  c.columns.reserve(b.cols);
  for (const auto& col : b.columns) c.columns.push_back(a.apply(col));
  return c;
}

}  // namespace derham
