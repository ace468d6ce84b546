#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "derham/charpoly.hpp"
#include "derham/ideal.hpp"

namespace derham {

// N x n matrix of partial derivatives of the dehomogenized forms in chart i.
// Chart variables are the homogeneous ones with X_i removed, in order.
PolyMatrix jacobian_chart_matrix(const std::vector<Poly>& forms, std::size_t nvars, std::size_t chart);

// Conditions whose common zeros (in the chart) are where the nullity of A
// exceeds m, i.e. rank(A) < cols - m.
struct DegeneracyData {
  std::size_t chart = 0;
  std::size_t symmetrized_size = 0;
  bool impossible = false;  // the rank bound can never be met (locus empty)
  std::vector<Poly> conditions;  // affine, in the chart variables
};

DegeneracyData degeneracy_polynomials(const PolyMatrix& a, int m, std::size_t chart);
// Same, phrased as rank(A) <= r; r < 0 gives an impossible condition.
DegeneracyData rank_conditions(const PolyMatrix& a, long r, std::size_t chart);

// Homogenizes affine chart polynomials and strips powers of X_chart.
std::vector<Poly> homogenize_conditions(const std::vector<Poly>& conditions, std::size_t chart);

// Emptiness of Z(gens) ∩ Z(conditions) ∩ {X_chart != 0}.
Emptiness locus_emptiness_on_X(const std::vector<Poly>& gens, const DegeneracyData& data,
                               const EmptinessOptions& opts = {}, unsigned* degree_reached = nullptr);

struct ChartReport {
  std::size_t chart = 0;
  std::size_t conditions = 0;
  int max_degree = -1;
  Emptiness locus = Emptiness::Unknown;
  unsigned degree_reached = 0;
};

struct SmoothnessReport {
  // "smooth", "singular", "empty" or "rejected-nonequidimensional"
  std::string verdict;
  std::optional<std::size_t> witness_chart;
  VarietyProfile profile;
  std::vector<ChartReport> charts;
};

SmoothnessReport smoothness_test(VanishingIdeal& ideal, long seed = 1, const EmptinessOptions& opts = {});

}  // namespace derham
