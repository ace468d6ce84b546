#include <gtest/gtest.h>

#include "derham/charpoly.hpp"
#include "oracles.hpp"

using namespace derham;
using namespace derham::testing;

namespace {

PolyMatrix constant(const std::vector<std::vector<Rational>>& rows) {
  PolyMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = Poly(0, rows[i][j]);
  return a;
}

// sum_j c_j Z^j with Z as an extra last variable.
Poly assemble(const std::vector<Poly>& coeffs, std::size_t nvars) {
  std::vector<int> keep(nvars + 1);
  for (std::size_t i = 0; i <= nvars; ++i) keep[i] = i < nvars ? static_cast<int>(i) : -1;
  Poly z = Poly::variable(nvars + 1, nvars), out(nvars + 1);
  for (std::size_t j = 0; j < coeffs.size(); ++j) out += coeffs[j].remap(nvars + 1, keep) * z.pow(j);
  return out;
}

}  // namespace

TEST(Charpoly, Berkowitz) {
  EXPECT_EQ(assemble(berkowitz_charpoly(constant({{0, 1}, {0, 0}})), 0), parse_poly("X0^2", 1));
  PolyMatrix diag(2, 2, 2);
  diag(0, 0) = Poly::variable(2, 0);
  diag(1, 1) = Poly::variable(2, 1);
  // a = X0, b = X1, Z = X2
  EXPECT_EQ(assemble(berkowitz_charpoly(diag), 2), parse_poly("X2^2 - X0*X2 - X1*X2 + X0*X1", 3));
  EXPECT_THROW(berkowitz_charpoly(PolyMatrix(2, 3, 0)), std::exception);
}

TEST(Charpoly, BerkowitzMatchesCofactorExpansion) {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + rng() % 4;
    PolyMatrix a(n, n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_poly(rng, 2, rng() % 2, 2, false);
    EXPECT_EQ(assemble(berkowitz_charpoly(a), 2), cofactor_charpoly(a));
  }
}

TEST(Charpoly, Mulmuley) {
  // T is variable 0 of the coefficients, Z is appended by assemble.
  auto id = mulmuley_rank_poly(constant({{1, 0}, {0, 1}}));
  EXPECT_FALSE(id.symmetrized);
  EXPECT_EQ(assemble(id.coeffs, 1), parse_poly("(1 - X1)*(X0 - X1)", 2));
  auto ones = mulmuley_rank_poly(constant({{1, 1}, {1, 1}}));
  EXPECT_EQ(assemble(ones.coeffs, 1), parse_poly("X1^2 - (1 + X0)*X1", 2));
  auto zero = mulmuley_rank_poly(constant({{0, 0}, {0, 0}}));
  EXPECT_EQ(assemble(zero.coeffs, 1), parse_poly("X1^2", 2));
  EXPECT_EQ(rank_from_mulmuley(ones), 1u);
  EXPECT_EQ(rank_from_mulmuley(id), 2u);
  EXPECT_EQ(rank_from_mulmuley(zero), 0u);
  EXPECT_TRUE(mulmuley_rank_poly(constant({{1, 2, 3}})).symmetrized);
}

TEST(Charpoly, RankRequiresConstantEntries) {
  PolyMatrix a(1, 1, 1);
  a(0, 0) = Poly::variable(1, 0);
  EXPECT_THROW(rank_from_mulmuley(mulmuley_rank_poly(a)), std::exception);
}

TEST(Charpoly, RectangularRanks) {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    auto rows = random_low_rank(rng, 5, 7, rng() % 6);
    EXPECT_EQ(rank_from_mulmuley(mulmuley_rank_poly(constant(rows))), elimination_rank(rows));
  }
}

TEST(CharpolyProperty, MulmuleyRankMatchesElimination) {
  auto c = mulmuley_matches_elimination(33, 50, 8);
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(CharpolyProperty, ConstantTermIsDeterminant) {
  Rng rng(34);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + rng() % 4;
    PolyMatrix a(n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Poly(0, random_rational(rng));
    // det(A - 0 I) = det A: the cofactor oracle evaluated at Z = 0.
    Poly oracle = cofactor_charpoly(a);
    EXPECT_EQ(berkowitz_charpoly(a)[0].evaluate({}), oracle.evaluate({Rational(0)}));
  }
}

TEST(Charpoly, RankConditions) {
  // A = (X0, X1): rank <= 0 exactly at the origin.
  PolyMatrix a(1, 2, 2);
  a(0, 0) = Poly::variable(2, 0);
  a(0, 1) = Poly::variable(2, 1);
  auto conds = rank_at_most_conditions(mulmuley_rank_poly(a), 0);
  ASSERT_FALSE(conds.empty());
  for (const auto& c : conds) EXPECT_EQ(c.evaluate({0, 0, 5}), 0);
  bool some_nonzero = false;
  for (const auto& c : conds) some_nonzero |= c.evaluate({1, 0, 5}) != 0;
  EXPECT_TRUE(some_nonzero);
  EXPECT_TRUE(rank_at_most_conditions(mulmuley_rank_poly(a), 1).empty());
}
