#include <gtest/gtest.h>

#include <vector>

#include "supertrop/claims.hpp"
#include "supertrop/random.hpp"
#include "test_util.hpp"

using namespace supertrop;
using supertrop::testing::M;
using supertrop::testing::S;

namespace {

struct ExpectedStats {
  std::size_t n, k, alpha_terms, alpha_tangible, beta_terms, beta_tangible,
      common;
};

// Frozen from an independent multiplicity-counting expansion (each monomial
// occurrence counted over all permutation/subset choices; coefficient 0t
// when counted once, 0g otherwise).
const std::vector<ExpectedStats> kStats = {
    {1, 1, 1, 1, 1, 1, 1},          {2, 1, 2, 2, 2, 2, 2},
    {2, 2, 2, 2, 2, 2, 2},          {3, 1, 6, 6, 6, 6, 6},
    {3, 2, 21, 18, 18, 18, 18},     {3, 3, 21, 6, 21, 6, 21},
    {4, 1, 24, 24, 24, 24, 24},     {4, 2, 348, 264, 276, 264, 276},
    {4, 3, 1584, 96, 1128, 96, 1128}, {4, 4, 2008, 24, 2008, 24, 2008},
};

std::vector<Scalar> grid() {
  std::vector<Scalar> g{Scalar::eps()};
  for (int v = -2; v <= 2; ++v) {
    g.push_back(Scalar::tangible(v));
    g.push_back(Scalar::ghost(v));
  }
  return g;
}

} // namespace

TEST(Claims, ExistsSummandMatchesSearch) {
  auto g = grid();
  for (const auto &target : g)
    for (const auto &base : g) {
      bool found = false;
      for (const auto &u : g)
        if (add(base, u) == target)
          found = true;
      EXPECT_EQ(exists_summand(target, base), found)
          << target << " = " << base << " (+) u";
    }
}

TEST(Claims, SupportParityWithFrozenStats) {
  for (const auto &want : kStats) {
    auto r = claim1_check(want.n, want.k);
    EXPECT_TRUE(r.ok()) << want.n << "," << want.k;
    EXPECT_EQ(r.stats.alpha_terms, want.alpha_terms);
    EXPECT_EQ(r.stats.alpha_tangible, want.alpha_tangible);
    EXPECT_EQ(r.stats.beta_terms, want.beta_terms);
    EXPECT_EQ(r.stats.beta_tangible, want.beta_tangible);
    EXPECT_EQ(r.stats.common_terms, want.common);
  }
}

TEST(Claims, GammaInclusion) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      auto r = claim2_check(n, k);
      EXPECT_TRUE(r.ok()) << n << "," << k;
      EXPECT_TRUE(r.coefficients_in_range);
    }
}

TEST(Claims, DetectsViolations) {
  // A doctored alpha lacking one of beta's tangible monomials.
  ClaimPolys p = build_claim_polys(3, 2);
  Poly trimmed(3);
  bool dropped = false;
  for (const auto &[e, c] : p.alpha.terms()) {
    if (!dropped && c.is_tangible() && !p.gamma.coeff(e).is_eps()) {
      dropped = true;
      continue;
    }
    trimmed.add_term(e, c);
  }
  ASSERT_TRUE(dropped);
  p.alpha = trimmed;
  EXPECT_EQ(claim1_check(p).violations.size(), 1u);
  EXPECT_EQ(claim2_check(p).missing.size(), 1u);

  ClaimPolys q = build_claim_polys(2, 1);
  q.beta.add_term(ExponentMatrix::variable(2, 0, 1), S("3t"));
  EXPECT_FALSE(claim2_check(q).coefficients_in_range);
}

TEST(Claims, Claim3Examples) {
  auto r = claim3_check(M("3t 0t; 1t 4t"), 1);
  EXPECT_EQ(r.beta_value, S("4t"));
  EXPECT_EQ(r.gamma_value, S("4t"));
  EXPECT_TRUE(r.ok());
  EXPECT_THROW(claim3_check(M("1t 2t; 0t 1t"), 1), Singular);
}

TEST(Claims, DecompositionExample) {
  auto r = decomposition_checks(M("3t 0t; 1t 4t"), 2);
  EXPECT_EQ(r.alpha_value, S("7t"));
  EXPECT_EQ(r.beta_value, S("7t"));
  EXPECT_TRUE(r.u_exists);
  EXPECT_EQ(r.s_exists, true);
  EXPECT_TRUE(r.surpasses);
  EXPECT_TRUE(r.ok());
  EXPECT_THROW(decomposition_checks(M("e e; e e"), 1), Singular);
}

// Ties with small values make ghost-coefficient monomials reach the maximum.
TEST(Claims, HoldOnRandomNonsingular) {
  Xoshiro256 rng(303);
  const ScalarDistribution dist{2, 0.75, 0.15, 0.1};
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      ClaimPolys p = build_claim_polys(n, k);
      for (int trial = 0; trial < 150; ++trial) {
        Matrix a = generate_nonsingular(rng, n, dist).matrix;
        ASSERT_TRUE(claim3_check(p, a).ok()) << a.to_text();
        ASSERT_TRUE(decomposition_checks(p, a).ok()) << a.to_text();
      }
    }
}

// gamma is a proper part of beta once n >= 3, so ghost removal is not vacuous.
TEST(Claims, GammaIsProperPartOfBeta) {
  EXPECT_NE(build_claim_polys(3, 3).beta, build_claim_polys(3, 3).gamma);
  EXPECT_EQ(build_claim_polys(3, 2).beta, build_claim_polys(3, 2).gamma);
}
