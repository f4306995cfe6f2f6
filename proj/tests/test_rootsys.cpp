#include "dws/rootsys.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>

using namespace dws::rootsys;

namespace {

// Length by breadth-first search over adjacent transpositions.
std::map<Permutation, int> bfs_lengths(int n) {
  std::map<Permutation, int> dist;
  std::deque<Permutation> queue{identity_perm(n)};
  dist[identity_perm(n)] = 0;
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (int i = 0; i + 1 < n; ++i) {
      Permutation q = compose(simple_reflection(n, i), p);
      if (!dist.count(q)) {
        dist[q] = dist[p] + 1;
        queue.push_back(q);
      }
    }
  }
  return dist;
}

WeightVec random_weight(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<int> c(n - 1);
  for (int& x : c) x = d(rng);
  return weight_from_omega(n, c);
}

}  // namespace

TEST(RootSys, SimpleRootNormalization) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(inner(simple_root(n, 0), simple_root(n, 0)), Rational(2));
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(inner(simple_root(n, 0), simple_root(n, 1)), Rational(-1));
}

TEST(RootSys, FundamentalWeightsAreDual) {
  for (int j = 0; j < 3; ++j) EXPECT_EQ(inner(fundamental_weight(4, 0), simple_root(4, j)), Rational(j == 0 ? 1 : 0));
  for (int n = 2; n <= 6; ++n)
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j)
        EXPECT_EQ(inner(fundamental_weight(n, i), simple_root(n, j)), Rational(i == j ? 1 : 0));
}

TEST(RootSys, Reflections) {
  const int n = 3;
  EXPECT_EQ(reflect(simple_root(n, 0), Root{0, 1}), Rational(-1) * simple_root(n, 0));
  EXPECT_EQ(reflect(fundamental_weight(n, 1), Root{0, 1}), fundamental_weight(n, 1));
  WeightVec lam = weight_from_omega(n, {2, 1});
  EXPECT_EQ(inner(lam, highest_root(n)), Rational(3));
  EXPECT_EQ(reflect(lam, highest_root(n)), lam - Rational(3) * root_vector(n, highest_root(n)));
}

TEST(RootSys, InnerProductProperties) {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 50; ++t) {
      WeightVec v = random_weight(n, rng), w = random_weight(n, rng);
      EXPECT_EQ(inner(v, w), inner(w, v));
      for (Root a : positive_roots(n)) {
        EXPECT_EQ(inner(reflect(v, a), reflect(w, a)), inner(v, w));
        EXPECT_EQ(reflect(reflect(v, a), a), v);
      }
    }
}

TEST(RootSys, PositiveRootCount) {
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(static_cast<int>(positive_roots(n).size()), n * (n - 1) / 2);
}

TEST(RootSys, LengthMatchesBreadthFirstSearch) {
  for (int n = 2; n <= 5; ++n) {
    auto dist = bfs_lengths(n);
    ASSERT_EQ(dist.size(), all_permutations(n).size());
    for (const auto& [p, d] : dist) EXPECT_EQ(perm_length(p), d) << to_string(p);
  }
  EXPECT_EQ(perm_length(identity_perm(4)), 0);
  Permutation s1 = simple_reflection(3, 0), s2 = simple_reflection(3, 1);
  EXPECT_EQ(perm_length(compose(s1, compose(s2, s1))), 3);
}

TEST(RootSys, ReflectionLengthIsTwiceHeightMinusOne) {
  for (int n = 2; n <= 5; ++n)
    for (Root a : positive_roots(n)) EXPECT_EQ(perm_length(reflect_left(a, identity_perm(n))), 2 * a.height() - 1);
}

TEST(RootSys, LengthChangeFollowsPairingSign) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> c(n - 1);
    for (int i = 0; i < n - 1; ++i) c[i] = n - 1 - i;
    WeightVec lam = weight_from_omega(n, c);
    for (const auto& sigma : all_permutations(n))
      for (Root a : positive_roots(n)) {
        Rational pr = inner(act(sigma, lam), a);
        ASSERT_NE(pr, Rational(0));
        const bool longer = perm_length(reflect_left(a, sigma)) > perm_length(sigma);
        EXPECT_EQ(longer, pr > 0) << to_string(sigma) << " " << to_string(a);
      }
  }
}

TEST(RootSys, Decompositions) {
  EXPECT_TRUE(root_decompositions(Root{1, 2}).empty());
  auto d = root_decompositions(highest_root(3));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].first.height() + d[0].second.height(), 2);
  EXPECT_EQ(root_decompositions(Root{0, 3}).size(), 4u);
  for (Root a : positive_roots(5))
    for (auto [b, c] : root_decompositions(a)) {
      auto s = root_sum(b, c);
      ASSERT_TRUE(s.has_value());
      EXPECT_EQ(*s, a);
      auto diff = root_difference(a, b);
      ASSERT_TRUE(diff.has_value());
      EXPECT_EQ(*diff, c);
    }
}

TEST(RootSys, ActionIsAHomomorphism) {
  std::mt19937 rng(3);
  const int n = 4;
  auto perms = all_permutations(n);
  for (int t = 0; t < 40; ++t) {
    const auto& a = perms[rng() % perms.size()];
    const auto& b = perms[rng() % perms.size()];
    WeightVec v = random_weight(n, rng);
    EXPECT_EQ(act(compose(a, b), v), act(a, act(b, v)));
  }
}

TEST(RootSys, RankGuard) {
  EXPECT_THROW(check_rank(1), std::invalid_argument);
  EXPECT_THROW(check_rank(9), std::invalid_argument);
  EXPECT_NO_THROW(check_rank(2));
}
