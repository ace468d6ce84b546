#include <gtest/gtest.h>

#include <set>

#include "derham/forms.hpp"
#include "oracles.hpp"

using namespace derham;
using namespace derham::testing;

namespace {

Poly P(const char* s, std::size_t nvars = 2) { return parse_poly(s, nvars); }
Form dX(int i, std::size_t nvars = 2) { return Form::differential(nvars, i); }

}  // namespace

TEST(Forms, Wedge) {
  Form w = wedge(dX(0), dX(1));
  EXPECT_EQ(w.coefficient({0, 1}), Poly(2, 1));
  EXPECT_EQ(wedge(dX(1), dX(0)), -w);
  EXPECT_TRUE(wedge(dX(0), dX(0)).is_zero());
}

TEST(Forms, ExteriorDerivative) {
  EXPECT_EQ(exterior_d(Form::function(P("X0*X1"))), P("X1") * dX(0) + P("X0") * dX(1));
  EXPECT_TRUE(exterior_d(Form::monomial_form(Poly(2, 3), {0})).is_zero());
  EXPECT_EQ(exterior_d(P("X0") * dX(1)), wedge(dX(0), dX(1)));
}

TEST(Forms, EulerContraction) {
  EXPECT_EQ(euler_contract(wedge(dX(0), dX(1))), P("X0") * dX(1) - P("X1") * dX(0));
  EXPECT_EQ(euler_contract(dX(1)), Form::function(P("X1")));
  EXPECT_TRUE(euler_contract(Form::function(P("X0^2"))).is_zero());
}

TEST(Forms, Dehomogenize) {
  Form a = P("X1") * dX(0) - P("X0") * dX(1);
  EXPECT_EQ(dehomogenize_form(a, 0), -dX(0, 1));
  EXPECT_EQ(dehomogenize_form(Form::function(P("X0^2 + X1^2")), 0), Form::function(parse_poly("1 + X0^2", 1)));
  EXPECT_TRUE(dehomogenize_form(wedge(dX(0), dX(1)), 0).is_zero());
}

TEST(Forms, OmegaBasisOnP1) {
  // numerator degree 2, p = 1: spanned by X1 dX0 - X0 dX1.
  OmegaBasis b = omega_basis(2, 1, 1, 1);
  ASSERT_EQ(b.forms.size(), 1u);
  Form expected = P("X1") * dX(0) - P("X0") * dX(1);
  Form f = b.forms[0];
  Rational scale = f.coefficient({0}).leading_coefficient() / expected.coefficient({0}).leading_coefficient();
  EXPECT_EQ(f, expected * scale);
}

TEST(Forms, OmegaBasisZeroForms) {
  for (int t = 1; t <= 3; ++t)
    for (int q = 0; q <= 2; ++q)
      EXPECT_EQ(omega_basis(3, 0, t, q).forms.size(), monomial_count(3, t * (q + 1)));
}

TEST(Forms, ExplicitBasisMatchesKernel) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (int p = 0; p <= static_cast<int>(n); ++p)
      for (int k = p; k <= p + 3; ++k) {
        auto explicit_basis = kernel_delta_basis(n, p, k);
        auto kernel = kernel_delta_basis_by_elimination(n, p, k);
        ASSERT_EQ(explicit_basis.size(), kernel.size()) << n << " " << p << " " << k;
        // Same span: stacking both has the rank of either.
        const unsigned cd = static_cast<unsigned>(k - p);
        Echelon e(form_space_dim(n, p, cd));
        for (const auto& a : kernel) e.insert(form_coordinates(a, cd));
        for (const auto& a : explicit_basis) {
          EXPECT_TRUE(euler_contract(a).is_zero());
          EXPECT_TRUE(e.contains(form_coordinates(a, cd)));
        }
        Echelon own(form_space_dim(n, p, cd));
        for (const auto& a : explicit_basis) own.insert(form_coordinates(a, cd));
        EXPECT_EQ(own.rank(), explicit_basis.size());
      }
}

TEST(Forms, IndexSubsets) {
  auto s = index_subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (IndexSet{0, 1}));
  EXPECT_EQ(s.back(), (IndexSet{2, 3}));
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(subset_rank(s[i], 4), i);
}

TEST(Forms, PullbackCommutesWithD) {
  Rng rng(41);
  std::vector<Poly> images{P("X0^2 + X1", 2), P("X0*X1", 2)};
  for (int t = 0; t < 10; ++t) {
    Form a = random_form(rng, 2, 1, 2, 3);
    EXPECT_EQ(pullback(exterior_d(a), images), exterior_d(pullback(a, images)));
  }
}

TEST(FormsProperty, Identities) {
  auto c = forms_identities(42, 200);
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(FormsProperty, WedgeIsGradedCommutative) {
  Rng rng(43);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 3 + rng() % 2;
    int p = rng() % 3, q = rng() % 3;
    Form a = random_form(rng, n, p, rng() % 3, 2), b = random_form(rng, n, q, rng() % 3, 2);
    Form ab = wedge(a, b), ba = wedge(b, a);
    EXPECT_EQ(ab, (p * q) % 2 ? -ba : ba);
    // Leibniz rule for d.
    Form lhs = exterior_d(ab);
    Form rhs = wedge(exterior_d(a), b) + (p % 2 ? -wedge(a, exterior_d(b)) : wedge(a, exterior_d(b)));
    EXPECT_EQ(lhs, rhs);
  }
}
