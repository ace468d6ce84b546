#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "derham/ideal.hpp"
#include "derham/smoothness.hpp"

namespace derham {

struct HyperplaneFamily {
  std::vector<Poly> forms;  // l_0..l_m, linear and homogeneous
  long seed = 0;
  // How each form was produced: "moment b=<b>", "sparse" or "given".
  std::vector<std::string> origin;
};

struct TransversalityCheck {
  std::vector<int> tuple;
  std::size_t chart = 0;
  std::size_t conditions = 0;
  Emptiness locus = Emptiness::Unknown;
  unsigned degree_reached = 0;
};

struct TransversalityCertificate {
  bool accepted = false;
  bool independent = false;
  bool empty_intersection = false;
  std::vector<TransversalityCheck> checks;
  std::string reason;  // why a family was rejected
};

// Rows: chart-dehomogenized differentials of basisF, then of l_j for j in tuple.
PolyMatrix transversality_matrix(const VarietyProfile& profile, const std::vector<Poly>& forms,
                                 const std::vector<int>& tuple, std::size_t chart);

// Checks independence, X ∩ Z(l_0..l_m) = {}, and for every tuple and chart
// that rank A^i_tuple < e + q + 1 has no solution on X ∩ L_tuple ∩ U_i.
TransversalityCertificate verify_family(const Variety& v, const VarietyProfile& profile,
                                        const std::vector<Poly>& forms, const EmptinessOptions& opts = {});

struct SearchOptions {
  long seed = 1;
  std::size_t budget = 64;  // total candidates examined
  EmptinessOptions emptiness;
};

// Greedy search: l_j is the first candidate that passes every condition on
// tuples ending in j. Candidates are moment-curve forms with parameters
// seed, seed+1, ...; each rejection is followed by one seeded sparse
// small-integer candidate, since moment-curve forms can all be tangent to X.
HyperplaneFamily find_hyperplanes(const Variety& v, const VarietyProfile& profile, const SearchOptions& opts,
                                  TransversalityCertificate* certificate = nullptr);

// All nonempty subsets of {0..m} in lexicographic order.
std::vector<std::vector<int>> all_tuples(int m);

}  // namespace derham
