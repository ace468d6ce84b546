#include <gtest/gtest.h>

#include "derham/smoothness.hpp"
#include "oracles.hpp"

using namespace derham;
using namespace derham::testing;

namespace {

Poly P(const char* s, std::size_t nvars = 3) { return parse_poly(s, nvars); }
const char* kNodal = "X1^2*X2 - X0^2*(X0 + X2)";

std::string verdict(const Variety& v) {
  VanishingIdeal ideal(v);
  return smoothness_test(ideal).verdict;
}

}  // namespace

TEST(Smoothness, JacobianChartMatrix) {
  PolyMatrix a = jacobian_chart_matrix({P("X0*X2 - X1^2")}, 3, 0);
  ASSERT_EQ(a.rows(), 1u);
  ASSERT_EQ(a.cols(), 2u);
  EXPECT_EQ(a(0, 0), parse_poly("-2*X0", 2));
  EXPECT_EQ(a(0, 1), Poly(2, 1));
  PolyMatrix f = jacobian_chart_matrix({P("X0^3 + X1^3 + X2^3")}, 3, 0);
  EXPECT_EQ(f(0, 0), parse_poly("3*X0^2", 2));
  EXPECT_EQ(f(0, 1), parse_poly("3*X1^2", 2));
  PolyMatrix pn = jacobian_chart_matrix({}, 4, 2);
  EXPECT_EQ(pn.rows(), 0u);
  EXPECT_EQ(pn.cols(), 3u);
}

TEST(Smoothness, DegeneracyPolynomials) {
  PolyMatrix c(1, 2, 2);
  c(0, 0) = Poly(2, 1);
  auto full = degeneracy_polynomials(c, 1, 0);
  bool unit = full.impossible;
  for (const auto& g : full.conditions) unit |= g.is_constant() && !g.is_zero();
  EXPECT_TRUE(unit);
  auto zero = degeneracy_polynomials(PolyMatrix(1, 2, 2), 1, 0);
  EXPECT_FALSE(zero.impossible);
  EXPECT_TRUE(zero.conditions.empty());
}

TEST(Smoothness, NodeIsDetected) {
  std::vector<Poly> gens{P(kNodal)};
  auto data = degeneracy_polynomials(jacobian_chart_matrix(gens, 3, 2), 1, 2);
  for (const auto& g : data.conditions) EXPECT_EQ(g.evaluate({0, 0}), 0) << g.to_string();
  EXPECT_EQ(locus_emptiness_on_X(gens, data), Emptiness::NonEmpty);
  std::vector<Poly> conic{P("X0*X2 - X1^2")};
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(locus_emptiness_on_X(conic, degeneracy_polynomials(jacobian_chart_matrix(conic, 3, i), 1, i)),
              Emptiness::Empty);
  DegeneracyData unit;
  unit.conditions = {Poly(2, 1)};
  EXPECT_EQ(locus_emptiness_on_X(gens, unit), Emptiness::Empty);
}

TEST(Smoothness, Verdicts) {
  EXPECT_EQ(verdict({2, {}}), "smooth");
  EXPECT_EQ(verdict({2, {P("X0*X2 - X1^2")}}), "smooth");
  VanishingIdeal nodal({2, {P(kNodal)}});
  auto r = smoothness_test(nodal);
  EXPECT_EQ(r.verdict, "singular");
  ASSERT_TRUE(r.witness_chart);
  EXPECT_EQ(*r.witness_chart, 2u);
  EXPECT_EQ(verdict({2, {P("X0"), P("X1"), P("X2")}}), "empty");
}

TEST(Smoothness, NonEquidimensionalInputIsRejected) {
  // Z(X0 X1, X0 X2) is the line X0 = 0 plus the point (1:0:0).
  auto v = verdict({2, {P("X0*X1"), P("X0*X2")}});
  EXPECT_NE(v, "smooth");
}

TEST(SmoothnessProperty, AgreesWithMinorCriterion) {
  std::vector<Variety> fixtures{{2, {P("X0*X2 - X1^2")}},
                                {2, {P("X0^3 + X1^3 + X2^3")}},
                                {2, {P(kNodal)}},
                                {2, {P("X1^2*X2 - X0^3")}},
                                {2, {P("X0*X1*X2")}},
                                {2, {P("X0^2 + X1^2 + X2^2")}}};
  for (const auto& v : fixtures) {
    bool oracle = minor_criterion_smooth(v.generators, v.nvars());
    EXPECT_EQ(verdict(v) == "smooth", oracle) << v.generators[0].to_string();
  }
}

TEST(SmoothnessProperty, InvariantUnderCoordinateChange) {
  Rng rng(61);
  for (int t = 0; t < 3; ++t) {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < 3; ++i) {
      Poly img = Poly::variable(3, i);
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i && rng() % 2) img += Poly::variable(3, j) * Rational(static_cast<int>(rng() % 3) - 1);
      images.push_back(img);
    }
    // Skip singular substitutions.
    QMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = images[i].coefficient(Monomial::variable(3, j));
    if (rank(m) < 3) continue;
    EXPECT_EQ(verdict({2, {P("X0*X2 - X1^2").substitute(images)}}), "smooth");
    EXPECT_EQ(verdict({2, {P(kNodal).substitute(images)}}), "singular");
  }
}

TEST(SmoothnessProperty, ChartOrderDoesNotChangeTheVerdict) {
  // Permuting the variables permutes the charts.
  std::vector<Poly> perm{Poly::variable(3, 2), Poly::variable(3, 0), Poly::variable(3, 1)};
  EXPECT_EQ(verdict({2, {P(kNodal).substitute(perm)}}), "singular");
  EXPECT_EQ(verdict({2, {P("X1^2*X2 - X0^3").substitute(perm)}}), "singular");
  EXPECT_EQ(verdict({2, {P("X0^3 + X1^3 + X2^3").substitute(perm)}}), "smooth");
}
