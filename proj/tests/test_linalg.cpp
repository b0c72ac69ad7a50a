#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "supertrop/linalg.hpp"
#include "supertrop/random.hpp"
#include "test_util.hpp"

using namespace supertrop;
using supertrop::testing::leibniz_det;
using supertrop::testing::M;
using supertrop::testing::S;

namespace {

const ScalarDistribution kMixed{3, 0.6, 0.25, 0.15};

// Coefficients of det(A (+) lambda I) as a formal polynomial in lambda,
// expanded over all permutations; result[k] is the lambda^(n-k) coefficient.
std::vector<Scalar> char_poly_by_lambda_expansion(const Matrix &a) {
  const std::size_t n = a.order();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Scalar> total(n + 1);
  do {
    std::vector<Scalar> prod{Scalar::one()}; // ascending powers of lambda
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> next(prod.size() + 1);
      for (std::size_t d = 0; d < prod.size(); ++d) {
        next[d] = add(next[d], mul(prod[d], a(i, p[i])));
        if (p[i] == i)
          next[d + 1] = add(next[d + 1], prod[d]);
      }
      prod = std::move(next);
    }
    for (std::size_t d = 0; d <= n; ++d)
      total[d] = add(total[d], prod[d]);
  } while (std::next_permutation(p.begin(), p.end()));
  std::reverse(total.begin(), total.end());
  return total;
}

Matrix conjugate(const Matrix &a, const std::vector<std::size_t> &perm) {
  Matrix b(a.order());
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < a.order(); ++j)
      b(i, j) = a(perm[i], perm[j]);
  return b;
}

std::vector<std::size_t> random_perm(Xoshiro256 &rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(p[i - 1], p[static_cast<std::size_t>(
                            rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
  return p;
}

} // namespace

TEST(Determinant, BruteExamples) {
  EXPECT_EQ(det_brute(M("3t 0t; 1t 4t")), S("7t"));
  EXPECT_EQ(det_brute(M("1t 2t; 0t 1t")), S("2g"));
  for (std::size_t n = 1; n <= 8; ++n)
    EXPECT_EQ(det_brute(Matrix::identity(n)), S("0t"));
  EXPECT_THROW(det_brute(Matrix::identity(9)), OrderTooLarge);
  EXPECT_EQ(det_brute(Matrix::identity(9), 9), S("0t"));
}

TEST(Determinant, AssignmentExamples) {
  EXPECT_EQ(det_assignment(M("3t 0t; 1t 4t")), S("7t"));
  EXPECT_EQ(det_assignment(M("3g e; e 4t")), S("7g"));
  EXPECT_EQ(det_assignment(M("e e; e 0t")), Scalar::eps());
  EXPECT_EQ(det_assignment(M("1t 2t; 0t 1t")), S("2g"));
  EXPECT_EQ(det_assignment(Matrix::identity(12)), S("0t"));
}

TEST(Determinant, EnginesAgreeWithLeibniz) {
  Xoshiro256 rng(1);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 6);
    Matrix a = generate_matrix(rng, n, kMixed);
    Scalar expected = leibniz_det(a);
    ASSERT_EQ(det_brute(a), expected) << a.to_text();
    ASSERT_EQ(det_assignment(a), expected) << a.to_text();
  }
}

TEST(Determinant, AutoSwitchesEngineAboveCap) {
  Xoshiro256 rng(5);
  Matrix a = generate_matrix(rng, 7, kMixed);
  DetOptions low{DetEngine::Auto, 3};
  EXPECT_EQ(det(a, low), det_brute(a));
  EXPECT_EQ(det(a, DetOptions{DetEngine::Brute, 7}), det_brute(a));
  EXPECT_THROW(det(a, DetOptions{DetEngine::Brute, 6}), OrderTooLarge);
}

TEST(Determinant, Invariances) {
  Xoshiro256 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 5);
    Matrix a = generate_matrix(rng, n, kMixed);
    const Scalar d = det(a);
    auto perm = random_perm(rng, n);
    Matrix b = conjugate(a, perm);
    EXPECT_EQ(det(b), d);
    EXPECT_EQ(char_poly(b), char_poly(a));
    EXPECT_EQ(det(a.transposed()), d);
    EXPECT_EQ(adjoint(a.transposed()), adjoint(a).transposed());

    const Scalar c = Scalar::tangible(rng.uniform_int(-4, 4));
    const auto r = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
    Matrix scaled_row = a;
    for (std::size_t j = 0; j < n; ++j)
      scaled_row(r, j) = mul(c, a(r, j));
    EXPECT_EQ(det(scaled_row), mul(c, d));
  }
}

TEST(Cofactor, Examples) {
  Matrix a = M("3t 0t; 1t 4t");
  EXPECT_EQ(cofactor(a, 0, 0), S("4t"));
  EXPECT_EQ(cofactor(a, 0, 1), S("1t"));
  EXPECT_EQ(cofactor(M("5t"), 0, 0), S("0t"));
  EXPECT_THROW(cofactor(a, 2, 0), std::out_of_range);
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(M("3t 0t; 1t 4t")), M("4t 0t; 1t 3t"));
  EXPECT_EQ(adjoint(Matrix::identity(2)), Matrix::identity(2));
  EXPECT_EQ(adjoint(M("5t")), M("0t"));
}

TEST(CharPoly, Examples) {
  auto cp = char_poly(M("3t 0t; 1t 4t"));
  EXPECT_EQ(cp.coeffs, (std::vector<Scalar>{S("0t"), S("4t"), S("7t")}));
  EXPECT_EQ(char_poly(Matrix::identity(3)).coeffs,
            (std::vector<Scalar>{S("0t"), S("0g"), S("0g"), S("0t")}));
  EXPECT_EQ(char_poly(M("5t")).coeffs, (std::vector<Scalar>{S("0t"), S("5t")}));
}

TEST(CharPoly, MatchesLambdaExpansion) {
  Xoshiro256 rng(8);
  for (int trial = 0; trial < 600; ++trial) {
    const auto n = static_cast<std::size_t>(1 + trial % 5);
    Matrix a = generate_matrix(rng, n, kMixed);
    auto cp = char_poly(a);
    ASSERT_EQ(cp.coeffs, char_poly_by_lambda_expansion(a)) << a.to_text();
    EXPECT_EQ(cp[0], Scalar::one());
    EXPECT_EQ(cp[n], det(a));
  }
}

TEST(Nonsingular, Examples) {
  EXPECT_TRUE(is_nonsingular(M("3t 0t; 1t 4t")));
  EXPECT_FALSE(is_nonsingular(M("1t 2t; 0t 1t")));
  EXPECT_FALSE(is_nonsingular(M("e")));
}

TEST(Nonsingular, EquivalentToInvertibleDeterminant) {
  Xoshiro256 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    Matrix a = generate_matrix(rng, 1 + trial % 4, kMixed);
    bool invertible = true;
    try {
      (void)pow(det(a), -1);
    } catch (const NotInvertible &) {
      invertible = false;
    }
    EXPECT_EQ(is_nonsingular(a), invertible);
  }
}

TEST(Pseudoinverse, Examples) {
  EXPECT_EQ(pseudoinverse(M("3t 0t; 1t 4t")), M("-3t -7t; -6t -4t"));
  EXPECT_EQ(pseudoinverse(Matrix::identity(4)), Matrix::identity(4));
  EXPECT_THROW(pseudoinverse(M("1t 2t; 0t 1t")), Singular);
}

TEST(Conjecture, Examples) {
  auto r = conjecture_check(M("3t 0t; 1t 4t"));
  ASSERT_EQ(r.terms.size(), 3u);
  EXPECT_EQ(r.det, S("7t"));
  EXPECT_EQ(r.terms[0].lhs, S("0t"));
  EXPECT_EQ(r.terms[0].rhs, S("0t"));
  EXPECT_EQ(r.terms[1].lhs, S("4t"));
  EXPECT_EQ(r.terms[1].rhs, S("4t"));
  EXPECT_EQ(r.terms[2].lhs, S("7t"));
  EXPECT_EQ(r.terms[2].rhs, S("7t"));
  EXPECT_TRUE(r.ok());
  EXPECT_THROW(conjecture_check(M("1t 2t; 0t 1t")), Singular);
}

TEST(Conjecture, KZeroIsUnitOnBothSides) {
  Xoshiro256 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto drawn = generate_nonsingular(rng, 1 + trial % 5, ScalarDistribution{});
    auto r = conjecture_check(drawn.matrix);
    EXPECT_EQ(r.terms[0].lhs, Scalar::one());
    EXPECT_EQ(r.terms[0].rhs, Scalar::one());
  }
}

TEST(Conjecture, HoldsOnRandomNonsingular) {
  Xoshiro256 rng(4242);
  for (int trial = 0; trial < 400; ++trial) {
    auto drawn = generate_nonsingular(rng, 1 + trial % 5,
                                      ScalarDistribution{2, 0.7, 0.2, 0.1});
    auto r = conjecture_check(drawn.matrix);
    ASSERT_TRUE(r.ok()) << drawn.matrix.to_text();
    for (const auto &t : r.terms)
      EXPECT_TRUE(t.nabla_holds.value());
  }
}

TEST(Conjecture, AllowSingularSkipsKZero) {
  ConjectureOptions opt;
  opt.allow_singular = true;
  auto r = conjecture_check(M("1t 2t; 0t 1t"), opt);
  ASSERT_EQ(r.terms.size(), 2u);
  EXPECT_EQ(r.terms[0].k, 1u);
  EXPECT_FALSE(r.terms[0].nabla_holds.has_value());
  auto eps = conjecture_check(M("e e; e e"), opt);
  EXPECT_EQ(eps.terms[0].rhs, Scalar::eps());
}
