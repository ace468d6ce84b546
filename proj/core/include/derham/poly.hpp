#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace derham {

using Rational = mpq_class;
using Exponent = std::uint16_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> e);
  Monomial(std::initializer_list<Exponent> e) : Monomial(std::vector<Exponent>(e)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned power = 1);

  std::size_t nvars() const { return e_.size(); }
  unsigned degree() const { return deg_; }
  Exponent operator[](std::size_t i) const { return e_[i]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  // Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<Exponent> e_;
  unsigned deg_ = 0;
};

// Graded lexicographic order with X_0 the largest variable.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(std::size_t nvars, const Rational& c);

  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly term(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  Rational coefficient(const Monomial& m) const;
  // Homogeneous component of the given degree.
  Poly component(unsigned deg) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly mul_monomial(const Monomial& m) const;
  Poly pow(unsigned e) const;
  Poly derivative(std::size_t i) const;
  // Sets X_i = 1 and drops it; result has nvars() - 1 variables.
  Poly dehomogenize(std::size_t i) const;
  // Inserts a new variable at position i and homogenizes to the given degree.
  Poly homogenize(std::size_t i, unsigned deg) const;
  // Largest power of X_i dividing every term.
  unsigned valuation(std::size_t i) const;
  // Divides by X_i^k; requires valuation(i) >= k.
  Poly divide_variable(std::size_t i, unsigned k) const;
  // Substitutes X_i -> images[i]; all images share one arity.
  Poly substitute(const std::vector<Poly>& images) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Inserts or removes variables: new variable j is old variable map[j], or absent if map[j] < 0.
  Poly remap(std::size_t new_nvars, const std::vector<int>& old_of_new) const;
  // Divides all coefficients so that the leading one is 1.
  Poly monic() const;

  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

std::string rational_to_string(const Rational& c);

// Monomials of degree k in nvars variables, descending grlex.
std::vector<Monomial> monomial_basis(std::size_t nvars, unsigned k);
// Monomials of degree <= k, descending grlex (highest degree first).
std::vector<Monomial> affine_monomial_basis(std::size_t nvars, unsigned k);

std::size_t binomial(std::size_t n, std::size_t k);
// Number of monomials of degree k in nvars variables.
std::size_t monomial_count(std::size_t nvars, unsigned k);
// Number of monomials of degree <= k.
std::size_t affine_monomial_count(std::size_t nvars, unsigned k);
// Position of m inside monomial_basis(m.nvars(), m.degree()).
std::size_t homogeneous_rank(const Monomial& m);
// Position of m inside affine_monomial_basis(m.nvars(), k).
std::size_t affine_rank(const Monomial& m, unsigned k);

// Parses sums of products of rationals and variables X0..X{n-1} (also X_0, x0).
// Juxtaposition multiplies; '^' takes a non-negative integer exponent.
Poly parse_poly(std::string_view text, std::size_t nvars);

}  // namespace derham
