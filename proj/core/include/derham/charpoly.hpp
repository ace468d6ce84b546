#pragma once

#include <cstddef>
#include <vector>

#include "derham/poly.hpp"

namespace derham {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nvars() const { return nvars_; }
  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0, cols_ = 0, nvars_ = 0;
  std::vector<Poly> data_;
};

// Coefficients c_0..c_S of det(A - Z I) as a polynomial in Z, computed with
// Berkowitz's division-free algorithm. A must be square.
std::vector<Poly> berkowitz_charpoly(const PolyMatrix& a);

// det(X B - Z I) with X = diag(1, T, ..., T^{S-1}). B = A when A is square and
// symmetric; otherwise B = [[0, A], [A^T, 0]], whose rank is twice that of A.
// The entries gain one extra variable T at index t_var.
struct MulmuleyPoly {
  std::vector<Poly> coeffs;  // coeffs[j] multiplies Z^j
  std::size_t size = 0;      // S, the order of B
  std::size_t t_var = 0;
  bool symmetrized = false;
};

MulmuleyPoly mulmuley_rank_poly(const PolyMatrix& a);

// Rank of the matrix the polynomial was built from; entries must be constant.
std::size_t rank_from_mulmuley(const MulmuleyPoly& p);

// Polynomials whose common zeros are exactly the points where rank(A) <= r:
// the T-coefficients of coeffs[0..S-r'-1] with r' = rank bound on B. Zero polynomials are dropped, so an
// empty result means the condition holds identically.
std::vector<Poly> rank_at_most_conditions(const MulmuleyPoly& p, std::size_t r);

}  // namespace derham
