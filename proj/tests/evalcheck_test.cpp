#include "twohook/evalcheck.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "twohook/errors.hpp"

namespace twohook {
namespace {

ExponentVector V(std::vector<int> v) { return ExponentVector(std::move(v)); }
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Partition ones(int n) { return Partition(std::vector<int>(static_cast<size_t>(n), 1)); }

TEST(EvalDivsymTest, Examples) {
  EXPECT_EQ(eval_divsym(two_hook(3), path_graph(3), V({3, 2, 1})), 54);
  EXPECT_EQ(eval_divsym(two_hook(3), path_graph(3), V({1, 2, 3})), 54);
  EXPECT_THROW(eval_divsym(two_hook(4), path_graph(4), V({1, 2, 2, 5})), SingularPointError);
  EXPECT_THROW(eval_divsym(two_hook(9), path_graph(9), V({1, 2, 3, 4, 5, 6, 7, 8, 9})),
               ResourceBoundError);
  EXPECT_THROW(eval_divsym(two_hook(4), path_graph(3), V({1, 2, 3})), DomainError);
}

TEST(EvalDivsymTest, SymmetricUnderAllPermutations) {
  const GraphSpec g = make_graph(4, {{1, 3}});
  std::vector<int> x{2, 5, 11, 17};
  const ExactRational ref = eval_divsym(two_hook(4), g, V(x));
  int seen = 0;
  do {
    EXPECT_EQ(eval_divsym(two_hook(4), g, V(x)), ref);
    ++seen;
  } while (std::next_permutation(x.begin(), x.end()));
  EXPECT_EQ(seen, 24);
}

TEST(EvalSchurTest, Examples) {
  EXPECT_EQ(eval_schur(P({2, 1, 0}), V({3, 2, 1})), 60);
  EXPECT_EQ(eval_schur(P({1, 1, 1}), V({3, 2, 1})), 6);
  EXPECT_EQ(eval_schur(P({0, 0, 0, 0}), V({4, 9, 1, 7})), 1);
  EXPECT_THROW(eval_schur(P({2, 1, 0}), V({3, 3, 1})), SingularPointError);
  EXPECT_THROW(eval_schur(P({2, 1, 0}), V({3, 1})), DomainError);
}

TEST(EvalSchurTest, MatchesLeibnizAlternant) {
  const std::vector<std::vector<int>> points{{3, 2, 1, 7, 5}, {1, 10, 4, 9, 2}, {-3, 4, 0, 2, 8}};
  for (const Partition& mu : std::vector<Partition>{P({2, 1, 1, 1, 0}), ones(5), P({3, 2, 0, 0, 0}),
                                                    P({4, 1, 0, 0, 0})}) {
    for (const auto& x : points) {
      const ExactRational v = eval_schur(mu, V(x));
      EXPECT_EQ(denominator(v), 1);
      EXPECT_EQ(numerator(v), oracle::schur_at(mu.parts(), x)) << mu;
    }
  }
}

TEST(BareissTest, Determinants) {
  using M = std::vector<std::vector<BigInt>>;
  EXPECT_EQ(bareiss_determinant(M{}), 1);
  EXPECT_EQ(bareiss_determinant(M{{5}}), 5);
  EXPECT_EQ(bareiss_determinant(M{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(bareiss_determinant(M{{0, 1}, {1, 0}}), -1);  // needs a pivot swap
  EXPECT_EQ(bareiss_determinant(M{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(bareiss_determinant(M{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), 2 * 1 + 1 * (1 - 3));
  EXPECT_THROW(bareiss_determinant(M{{1, 2}}), DomainError);
}

TEST(EvalAntisymmetrizedTest, EqualsSignedSchur) {
  const ExponentVector x = V({2, 7, 3, 11});
  std::vector<int> t{5, 3, 2, 0};
  do {
    const SortedShape s = l_of(V(t));
    EXPECT_EQ(eval_antisymmetrized(V(t), x), eval_schur(s.partition, x) * s.sign) << V(t);
  } while (std::prev_permutation(t.begin(), t.end()));
  EXPECT_EQ(eval_antisymmetrized(V({3, 3, 0}), V({1, 2, 3})), 0);
}

TEST(SamplePointsTest, DistinctAndDeterministic) {
  const auto a = sample_points(6, 5, 42);
  EXPECT_EQ(a, sample_points(6, 5, 42));
  EXPECT_NE(a, sample_points(6, 5, 43));
  ASSERT_EQ(a.size(), 5u);
  for (const ExponentVector& p : a) {
    EXPECT_EQ(std::set<int>(p.begin(), p.end()).size(), 6u);
    for (int x : p) {
      EXPECT_GE(x, 1);
      EXPECT_LE(x, 1000);
    }
  }
}

TEST(VerifyTest, PathExamples) {
  const PointReport r3 = verify_at_points(3, path_graph(3), 5, 42);
  EXPECT_TRUE(r3.all_match());
  EXPECT_EQ(r3.checks.size(), 5u);
  EXPECT_EQ(r3.expansion.coefficient(ones(3)), -1);

  const PointReport r4 = verify_at_points(4, path_graph(4), 5, 42);
  EXPECT_TRUE(r4.all_match());
  EXPECT_EQ(r4.expansion.coefficient(ones(4)), -2);
}

TEST(VerifyTest, CorruptedCoefficientFails) {
  SchurExpansion bad(4);
  bad.add(two_hook(4), 1);
  bad.add(ones(4), -3);
  try {
    verify_expansion_at_points(bad, path_graph(4), sample_points(4, 3, 42));
    FAIL() << "corrupted expansion verified";
  } catch (const VerificationFailure& e) {
    EXPECT_NE(std::string(e.what()).find("point"), std::string::npos);
  }
}

TEST(VerifyTest, Bound) {
  EXPECT_THROW(verify_at_points(7, path_graph(7), 1, 42, 6), ResourceBoundError);
}

}  // namespace
}  // namespace twohook
