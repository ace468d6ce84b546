#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "derham/linalg.hpp"
#include "derham/poly.hpp"

namespace derham {

// Strictly increasing variable indices naming dX_{j_1} ^ ... ^ dX_{j_p}.
using IndexSet = std::vector<int>;

// Polynomial p-form sum_J f_J dX_J.
class Form {
 public:
  Form() = default;
  Form(std::size_t nvars, int p) : nvars_(nvars), p_(p) {}

  static Form function(const Poly& f);
  static Form differential(std::size_t nvars, int i);
  static Form monomial_form(const Poly& coeff, IndexSet j);

  std::size_t nvars() const { return nvars_; }
  int p() const { return p_; }
  const std::map<IndexSet, Poly>& components() const { return comps_; }
  Poly coefficient(const IndexSet& j) const;
  bool is_zero() const { return comps_.empty(); }
  // Largest coefficient degree, -1 for zero.
  int coefficient_degree() const;
  // True when all coefficients are homogeneous of one degree.
  bool is_homogeneous() const;

  void add(const IndexSet& j, const Poly& c);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Poly& f);
  Form& operator*=(const Rational& c);
  Form operator-() const;
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Poly& f) { return a *= f; }
  friend Form operator*(const Poly& f, Form a) { return a *= f; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  bool operator==(const Form& o) const;
  bool operator!=(const Form& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  int p_ = 0;
  std::map<IndexSet, Poly> comps_;
};

Form wedge(const Form& a, const Form& b);
Form exterior_d(const Form& a);
// Contraction with the Euler field: C[X]-linear, dX_i -> X_i.
Form euler_contract(const Form& a);
// Sets X_chart = 1 and dX_chart = 0, renumbering the remaining variables.
Form dehomogenize_form(const Form& a, std::size_t chart);
// Applies a polynomial substitution X_i -> images[i] and dX_i -> d(images[i]).
Form pullback(const Form& a, const std::vector<Poly>& images);

// All p-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> index_subsets(std::size_t n, std::size_t p);
std::size_t subset_rank(const IndexSet& j, std::size_t n);

// Coordinates of a p-form whose coefficients are homogeneous of degree
// coeff_degree: column = subset_rank(J) * monomial_count + homogeneous_rank(m).
SparseVec form_coordinates(const Form& a, unsigned coeff_degree);
std::size_t form_space_dim(std::size_t nvars, int p, unsigned coeff_degree);

// Basis of M^p_k: forms alpha of graded degree k (coefficients of degree k - p)
// with euler_contract(alpha) = 0, given by the monomial multiples
// X^a * contract(dX_c ^ dX_J), c < min J, supp(a) within {c, ..., n}.
std::vector<Form> kernel_delta_basis(std::size_t nvars, int p, int k);
// Same space computed as the kernel of the contraction matrix.
std::vector<Form> kernel_delta_basis_by_elimination(std::size_t nvars, int p, int k);

// Basis of the numerator space for the slot with q + 1 hyperplanes and pole
// order t: M^p_k with k = t(q+1).
struct OmegaBasis {
  int p = 0;
  int t = 0;
  int q = 0;
  int degree = 0;
  std::vector<Form> forms;
};

OmegaBasis omega_basis(std::size_t nvars, int p, int t, int q);

}  // namespace derham
