#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "derham/forms.hpp"
#include "derham/hyperplanes.hpp"
#include "derham/ideal.hpp"
#include "derham/smoothness.hpp"

namespace derham {

// Regularity bound for the sheaf of p-forms: p(em+1)D, and e(D-1) for p = 0.
long regularity_bounds(int p, int m, int e, unsigned D);
// Pole order s = m(em+1)D for e >= 1; m+1 when e = 0.
long pole_order_bound(int m, int e, unsigned D);

// Local description of X on the chart X_chart != 0: e generators g whose
// Jacobian block with respect to the dependent variables Y has determinant h,
// with dim(X ∩ Z(X_chart h)) < m. Indices refer to chart variables.
struct ChartFrame {
  std::size_t chart = 0;
  std::size_t nvars = 0;             // chart variables, n
  std::vector<Poly> generators;      // g_1..g_e, affine
  std::vector<std::size_t> dependent;  // Y
  std::vector<std::size_t> free_vars;  // x, in increasing order
  Poly h;
  // dY_r * h = sum_c dy[r][c] dx_c, i.e. dy = -adj(dg/dY) dg/dx.
  std::vector<std::vector<Poly>> dy;
};

ChartFrame select_frame(const Variety& v, const VarietyProfile& profile, long seed = 1);

// Coefficients, scaled by h^p, of the restriction of the dehomogenized
// numerator to X in the basis dx_I (I over p-subsets of the free variables,
// lexicographic).
std::vector<Poly> reduce_form(const Form& alpha, const ChartFrame& frame);

// Computes the restriction map alpha -> (reduce_form coefficients mod I(X)),
// whose kernel is N^p.
class RestrictionContext {
 public:
  RestrictionContext(VanishingIdeal& ideal, ChartFrame frame);

  const ChartFrame& frame() const { return frame_; }
  VanishingIdeal& ideal() { return ideal_; }
  // Degree bound k' for the reduced coefficients of p-forms of graded degree k.
  unsigned coefficient_bound(int p, int k) const;
  std::size_t image_columns(int p, int k) const;
  // Stacked normal forms; zero iff alpha restricts to zero on X.
  SparseVec restrict(const Form& alpha, int p, int k);

 private:
  const Echelon& affine_ideal(unsigned k);
  const Form& frame_wedge(const IndexSet& j);

  VanishingIdeal& ideal_;
  ChartFrame frame_;
  unsigned frame_degree_ = 0;
  std::vector<Form> phi_;  // image of each chart differential, in the free basis
  std::map<unsigned, Echelon> affine_ideal_;
  std::map<IndexSet, Form> wedges_;
};

// Basis of N^p_k = {alpha in M^p_k : alpha|_X = 0}.
std::vector<Form> restriction_kernel(RestrictionContext& ctx, int p, int k);
// Same for the slot of a tuple with pole order t = s + p.
std::vector<Form> restriction_kernel(RestrictionContext& ctx, const std::vector<int>& tuple, int p, int s);

// M^p_k / N^p_k with a basis drawn from kernel_delta_basis in order.
class QuotientSpace {
 public:
  QuotientSpace(RestrictionContext& ctx, int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t kernel_dim() const { return ambient_ - basis_.size(); }
  const std::vector<Form>& basis() const { return basis_; }
  // Coordinates of beta (in M^p_k) modulo N^p_k.
  SparseVec coordinates(const Form& beta) const;

 private:
  RestrictionContext& ctx_;
  int p_, k_;
  std::size_t ambient_ = 0;
  std::vector<Form> basis_;
  Echelon ech_;
};

// Shares restriction data and quotient spaces between slots.
class FormSpaces {
 public:
  FormSpaces(VanishingIdeal& ideal, ChartFrame frame) : ctx_(ideal, std::move(frame)) {}
  QuotientSpace& space(int p, int k);
  RestrictionContext& context() { return ctx_; }

 private:
  RestrictionContext ctx_;
  std::map<std::pair<int, int>, std::unique_ptr<QuotientSpace>> spaces_;
};

// Numerator of d(alpha / f^t) at pole t+1: f dalpha - t df ^ alpha.
Form quotient_rule_d(const Form& alpha, const Poly& f, int t);

// de Rham complex of X minus the hyperplanes of one tuple.
struct ComplementComplex {
  std::vector<int> tuple;
  int s = 0;
  std::vector<const QuotientSpace*> spaces;  // K^p, p = 0..m, pole t = s + p
  std::vector<SparseMatrix> d;               // K^p -> K^{p+1}
  std::vector<std::size_t> cohomology;       // dims H^p
  std::vector<std::vector<SparseVec>> representatives;
};

ComplementComplex complement_complex(FormSpaces& spaces, const VarietyProfile& profile,
                                     const std::vector<Poly>& family, const std::vector<int>& tuple, int s);

struct Slot {
  int p = 0;
  int q = 0;
  std::vector<int> tuple;
  int t = 0;
  const QuotientSpace* space = nullptr;
  std::size_t offset = 0;  // position inside T^{p+q}
};

struct CechComplex {
  int m = 0;
  int s = 0;
  std::vector<Poly> family;
  std::vector<Slot> slots;
  std::vector<std::size_t> total_dims;  // T^0..T^{2m}
  std::vector<SparseMatrix> d_part;     // de Rham part T^k -> T^{k+1}
  std::vector<SparseMatrix> delta_part; // Cech part, without the (-1)^p sign
  std::vector<SparseMatrix> d_total;    // d + (-1)^p delta
};

CechComplex cech_complex(FormSpaces& spaces, const VarietyProfile& profile, const std::vector<Poly>& family, int s);

// Component of a representative in one slot: omega = numerator / (prod l)^t.
struct RepresentativeComponent {
  std::vector<int> tuple;
  int p = 0;
  int t = 0;
  Form numerator;
};

struct Representative {
  int k = 0;
  SparseVec vector;  // coordinates in T^k
  std::vector<RepresentativeComponent> components;
};

struct CohomologyResult {
  std::vector<std::size_t> betti;
  std::vector<Representative> representatives;
  int s_used = 0;
  bool stabilized = false;
};

CohomologyResult total_cohomology(const CechComplex& c, bool with_representatives = true);

struct BettiOptions {
  long seed = 1;
  std::optional<int> pole_order;  // override; enables the s, s+1 stabilization check
  std::size_t budget = 64;
  bool representatives = true;
  EmptinessOptions emptiness;
};

struct BettiReport {
  CohomologyResult result;
  SmoothnessReport smoothness;
  HyperplaneFamily family;
  TransversalityCertificate certificate;
  ChartFrame frame;
  std::vector<std::size_t> total_dims;
};

// Full pipeline: profile, smoothness test, hyperplanes, Cech complex, cohomology.
BettiReport betti(const Variety& v, const BettiOptions& opts = {});

}  // namespace derham
