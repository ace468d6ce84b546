#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "derham/linalg.hpp"
#include "derham/poly.hpp"

namespace derham {

// Projective variety X in P^n cut out by homogeneous generators in n+1 variables.
struct Variety {
  int n = 0;
  std::vector<Poly> generators;

  std::size_t nvars() const { return static_cast<std::size_t>(n) + 1; }
  unsigned max_degree() const;
};

// Throws ValidationError unless all generators are homogeneous in n+1 variables.
void validate(const Variety& v);

// Coordinates of a homogeneous polynomial in monomial_basis(nvars, degree).
SparseVec poly_coordinates(const Poly& f, unsigned degree);
Poly poly_from_coordinates(const SparseVec& v, std::size_t nvars, unsigned degree);

// A subspace of the degree-k forms, kept in echelon form.
class IdealSlice {
 public:
  IdealSlice(std::size_t nvars, unsigned degree);
  // (gens)_k spanned by monomial multiples of the homogeneous generators.
  static IdealSlice generated(const std::vector<Poly>& gens, std::size_t nvars, unsigned degree);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t dim() const { return ech_.rank(); }
  std::size_t ambient_dim() const { return ech_.ncols(); }
  bool is_full() const { return dim() == ambient_dim(); }

  // Returns true if f was new.
  bool insert(const Poly& f);
  bool contains(const Poly& f) const;
  // Remainder supported on standard monomials.
  Poly normal_form(const Poly& f) const;
  std::vector<Poly> basis() const;
  std::vector<Monomial> standard_monomials() const;
  const Echelon& echelon() const { return ech_; }

 private:
  std::size_t nvars_;
  unsigned degree_;
  Echelon ech_;
};

// Slices 0..k of the ideal generated by gens.
struct TruncatedIdeal {
  unsigned k = 0;
  std::vector<IdealSlice> slices;
};

TruncatedIdeal generated_truncation(const std::vector<Poly>& gens, std::size_t nvars, unsigned k);

// {f in S_k : X_i^N f in (gens)_{k+N} for every i}.
IdealSlice saturate_slice(const std::vector<Poly>& gens, std::size_t nvars, unsigned k, unsigned n_power);
// {f in S_k : X_i^N f in (gens)_{k+N}} for a single variable.
IdealSlice saturate_slice_by(const std::vector<Poly>& gens, std::size_t nvars, unsigned k, std::size_t i,
                             unsigned n_power);

enum class Emptiness { Empty, NonEmpty, Unknown };

struct EmptinessOptions {
  // Largest number of monomials allowed in one slice before giving up.
  std::size_t max_columns = 250000;
  // When nonzero, stop at this degree and report Unknown instead of going to
  // the Nullstellensatz bound.
  unsigned degree_cap = 0;
};

// Z(gens) = {} in projective space (gens homogeneous, possibly including
// linear forms, which are eliminated first).
bool projective_emptiness(const std::vector<Poly>& gens, std::size_t nvars,
                          const EmptinessOptions& opts = {});

// Decides whether Z(gens) misses the open set {chart_form != 0}, where
// chart_form is linear, by testing chart_form^M in (gens)_M up to the
// effective Nullstellensatz bound (d^n', or 2d^n' - 1 with more than n'
// generators after linear elimination). Throws Inconclusive if a slice would
// exceed opts.max_columns.
Emptiness chart_emptiness(const std::vector<Poly>& gens, const Poly& chart_form,
                          const EmptinessOptions& opts = {}, unsigned* degree_reached = nullptr);

// Lazily computed slices of the vanishing ideal I(X), obtained by saturating
// the generator ideal.
class VanishingIdeal {
 public:
  explicit VanishingIdeal(Variety v);
  const Variety& variety() const { return v_; }
  const IdealSlice& slice(unsigned k);
  TruncatedIdeal truncation(unsigned k);
  std::size_t hilbert_function(unsigned k);

 private:
  Variety v_;
  std::map<unsigned, IdealSlice> cache_;
};

// Linear form X_0 + b X_1 + ... + b^n X_n on the moment curve.
Poly moment_form(std::size_t nvars, long b);

// Projective dimension of X, or nullopt when X is empty. Probes with
// moment-curve forms whose parameters start at seed.
std::optional<int> dimension(const Variety& v, long seed = 1);

// Degree of an m-dimensional X from its Hilbert polynomial.
unsigned degree(VanishingIdeal& ideal, int m);

struct VarietyProfile {
  int n = 0;
  int m = -1;           // -1 for the empty variety
  int e = 0;            // codimension n - m
  unsigned D = 0;       // degree
  unsigned d = 0;       // largest generator degree
  std::vector<Poly> basisF;  // basis of I(X)_D
};

VarietyProfile variety_profile(VanishingIdeal& ideal, long seed = 1);

}  // namespace derham
