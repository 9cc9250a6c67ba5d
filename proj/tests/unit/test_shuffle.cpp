#include "cjac/shuffle.hpp"

#include "../oracles/oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace cjac;

TEST(SSequence, Examples) {
  EXPECT_EQ(s_sequence(2, 3, 1), (std::vector<long>{2, 1}));
  EXPECT_EQ(s_sequence(1, 1, 3), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(s_sequence(2, 3, 2), (std::vector<long>{2, 1, 2, 1}));
  EXPECT_THROW(s_sequence(2, 4, 1), std::invalid_argument);
}

TEST(SSequence, SumsToMd) {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 7; ++m) {
      if (std::gcd(n, m) != 1) continue;
      for (int d = 1; d <= 3; ++d) {
        auto S = s_sequence(n, m, d);
        long t = 0;
        for (long v : S) t += v;
        EXPECT_EQ(t, long(m) * d);
      }
    }
}

TEST(Partitions, MatchOracle) {
  for (int N = 1; N <= 10; ++N) EXPECT_EQ(partitions(N), oracle::partitions(N));
}

TEST(SYT, CountsPerShapeAgreeWithHookLengths) {
  for (int N = 1; N <= 7; ++N) {
    std::map<Partition, long> by;
    for (auto& T : enumerate_syt(N)) ++by[T.shape];
    for (auto& lam : oracle::partitions(N)) EXPECT_EQ(by[lam], oracle::hook_length_count(lam));
  }
  EXPECT_EQ(enumerate_syt(6).size(), 76u);
  EXPECT_EQ(enumerate_syt(4).size(), 10u);
  EXPECT_THROW(enumerate_syt(0), std::invalid_argument);
}

TEST(SYT, Standardness) {
  for (auto& T : enumerate_syt(6)) {
    std::set<std::pair<int, int>> cells(T.cell.begin(), T.cell.end());
    ASSERT_EQ(cells.size(), 6u);
    for (size_t i = 0; i < T.cell.size(); ++i) {
      auto [r, c] = T.cell[i];
      ASSERT_LT(c, T.shape[size_t(r)]);
      // left and upper neighbours carry smaller labels
      for (size_t k = i + 1; k < T.cell.size(); ++k) {
        ASSERT_FALSE(T.cell[k] == std::make_pair(r, c - 1));
        ASSERT_FALSE(T.cell[k] == std::make_pair(r - 1, c));
      }
    }
  }
}

TEST(SytSum, SingleBox) {
  // one tableau, z = 1: the sum is 1
  auto v = negut_eval(1, 1, 1, Rational(2, 3), Rational(-5, 7));
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, 1);
}

TEST(SytSum, AgreesWithQtCatalan) {
  for (auto [n, m, d] : {std::tuple{2, 3, 1}, {1, 2, 2}, {1, 1, 2}, {1, 3, 2}}) {
    auto C = qt_catalan(n * d, m * d);
    for (auto [q, t] : {std::pair{Rational(2), Rational(3)}, {Rational(-1, 2), Rational(5, 3)}, {Rational(7, 4), Rational(-2, 9)}}) {
      auto v = negut_eval(n, m, d, q, t);
      ASSERT_TRUE(v);
      EXPECT_EQ(*v, qt_eval(C, q, t)) << n << "," << m << "," << d;
    }
  }
}

TEST(VerifyIdentity, ReportsAndDeterminism) {
  auto r = verify_identity(2, 3, 1, 5, 7);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.points.size(), 5u);
  auto r2 = verify_identity(2, 3, 1, 5, 7);
  EXPECT_EQ(r.points, r2.points);
  EXPECT_EQ(r.lhs, r2.lhs);
  for (auto& [q, t] : r.points) {
    EXPECT_NE(q, 1);
    EXPECT_NE(t, 1);
    EXPECT_NE(q, 0);
  }
  EXPECT_THROW(verify_identity(3, 1, 3, 1, 7), std::invalid_argument);
}
