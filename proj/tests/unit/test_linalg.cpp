#include <gtest/gtest.h>

#include "derham/linalg.hpp"
#include "oracles.hpp"

using namespace derham;
using derham::testing::elimination_rank;
using derham::testing::random_low_rank;
using derham::testing::Rng;

namespace {

using Vec = std::vector<Rational>;

QMatrix M(std::vector<Vec> rows) { return QMatrix::from_rows(rows); }

bool in_kernel(const QMatrix& a, const Vec& v) {
  for (const auto& x : a.apply(v))
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST(Linalg, KernelBasis) {
  auto k = kernel_basis(M({{1, 1}, {1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
  EXPECT_TRUE(kernel_basis(QMatrix::identity(3)).empty());
  EXPECT_EQ(kernel_basis(QMatrix(2, 3)).size(), 3u);
}

TEST(Linalg, ImageBasis) {
  EXPECT_EQ(image_basis(M({{1, 2}, {2, 4}})).size(), 1u);
  EXPECT_EQ(image_basis(QMatrix::identity(2)).size(), 2u);
  EXPECT_TRUE(image_basis(QMatrix(3, 2)).empty());
}

TEST(Linalg, Solve) {
  auto x = solve(QMatrix::identity(2), {3, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Vec{3, 5}));
  auto y = solve(M({{1, 1}}), {2});
  ASSERT_TRUE(y);
  EXPECT_EQ((*y)[0] + (*y)[1], 2);
  EXPECT_FALSE(solve(M({{1}, {1}}), {0, 1}));
  EXPECT_THROW(solve(QMatrix::identity(2), {1, 2, 3}), std::exception);
}

TEST(Linalg, ExtendBasis) {
  std::vector<Vec> std3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto b = extend_basis(std3, {{1, 1, 0}});
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0], (Vec{1, 1, 0}));
  EXPECT_EQ(rank(QMatrix::from_rows(b)), 3u);
  EXPECT_EQ(extend_basis(std3, std3), std3);
  std::vector<Vec> plane{{1, 0}, {0, 1}};
  EXPECT_EQ(extend_basis(plane, {}), plane);
  EXPECT_THROW(extend_basis(std3, {{1, 0, 0}, {2, 0, 0}}), std::exception);
  EXPECT_THROW(extend_basis({{1, 0, 0}}, {{0, 1, 0}}), std::exception);
}

TEST(Linalg, EchelonTracksDependencies) {
  Echelon e(3);
  EXPECT_TRUE(e.insert({{0, 1}, {1, 2}}, {{0, 1}}));
  EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}, {{1, 1}}));
  SparseVec dep;
  // 1*(1,2,0) + 2*(0,1,1) = (1,4,2)
  EXPECT_FALSE(e.insert({{0, 1}, {1, 4}, {2, 2}}, {{2, 1}}, &dep));
  EXPECT_EQ(dense_from_sparse(dep, 3), (Vec{-1, -2, 1}));
  EXPECT_TRUE(e.contains({{0, 2}, {1, 4}}));
  EXPECT_FALSE(e.contains({{2, 1}}));
}

TEST(LinalgProperty, RankNullity) {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    auto rows = random_low_rank(rng, r, c, rng() % (std::min(r, c) + 1));
    QMatrix a = QMatrix::from_rows(rows);
    auto k = kernel_basis(a);
    EXPECT_EQ(k.size() + image_basis(a).size(), c);
    EXPECT_EQ(rank(a), elimination_rank(rows));
    for (const auto& v : k) EXPECT_TRUE(in_kernel(a, v));
  }
}

TEST(LinalgProperty, SparseMatchesDense) {
  Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    auto rows = random_low_rank(rng, r, c, rng() % (std::min(r, c) + 1));
    SparseMatrix s{r, c, {}};
    for (std::size_t j = 0; j < c; ++j) {
      Vec col(r);
      for (std::size_t i = 0; i < r; ++i) col[i] = rows[i][j];
      s.columns.push_back(sparse_from_dense(col));
    }
    EXPECT_EQ(rank(s), elimination_rank(rows));
    auto k = kernel_basis(s);
    EXPECT_EQ(k.size(), c - elimination_rank(rows));
    for (const auto& v : k) EXPECT_TRUE(s.apply(v).empty());
  }
}

TEST(LinalgProperty, SolveFindsSolutions) {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    QMatrix a = QMatrix::from_rows(random_low_rank(rng, r, c, 1 + rng() % std::min(r, c)));
    Vec x(c);
    for (auto& v : x) v = derham::testing::random_rational(rng);
    auto b = a.apply(x);
    auto y = solve(a, b);
    ASSERT_TRUE(y);
    EXPECT_EQ(a.apply(*y), b);
  }
}
