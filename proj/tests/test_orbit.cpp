#include "dws/orbit.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dws::orbit;
using dws::rootsys::Rational;

namespace {

OrbitPoint pt(const Permutation& s, const RootVec& g) { return OrbitPoint{s, g}; }

Permutation s1() { return dws::rootsys::simple_reflection(3, 0); }
Permutation s2() { return dws::rootsys::simple_reflection(3, 1); }

}  // namespace

class OrbitN3 : public ::testing::Test {
 protected:
  Orbit orb{OrbitConfig{3, 6, {2, 1}}};
  Root a1{0, 1}, a2{1, 2}, theta{0, 2};
};

TEST_F(OrbitN3, Degree) {
  EXPECT_EQ(orb.degree(orb.base_point()), 0);
  EXPECT_EQ(orb.degree(pt(dws::rootsys::identity_perm(3), {-1, 0})), 2);
  EXPECT_EQ(orb.degree(pt(dws::rootsys::compose(s1(), s2()), {1, 1})), -2);
}

TEST_F(OrbitN3, ScreeningCharge) {
  EXPECT_EQ(orb.m_alpha(orb.base_point(), a1), 2);
  for (int g1 = -2; g1 <= 2; ++g1)
    for (int g2 = -2; g2 <= 2; ++g2) EXPECT_EQ(orb.m_alpha(pt(s1(), {g1, g2}), theta), 1);
  EXPECT_EQ(orb.m_alpha(pt(s1(), {0, 0}), a1), 4);
}

TEST_F(OrbitN3, LambdaAlpha) {
  OrbitPoint q = orb.lambda_alpha(orb.base_point(), a1);
  EXPECT_EQ(q, pt(s1(), {0, 0}));
  EXPECT_EQ(orb.weight(q), orb.lambda() - Rational(2) * dws::rootsys::root_vector(3, a1));
}

TEST_F(OrbitN3, Kappa) {
  EXPECT_EQ(orb.kappa(orb.base_point(), a1), 0);
  EXPECT_EQ(orb.kappa(pt(s1(), {0, 0}), a1), 1);
}

TEST_F(OrbitN3, ThetaAdmissibleExactlyOnThreeClasses) {
  std::set<Permutation> expected{s1(), s2(), dws::rootsys::compose(s1(), dws::rootsys::compose(s2(), s1()))};
  for (const auto& sigma : dws::rootsys::all_permutations(3))
    for (int g1 = 0; g1 <= 1; ++g1)
      for (int g2 = 0; g2 <= 1; ++g2)
        EXPECT_EQ(orb.is_admissible(pt(sigma, {g1, g2}), theta), expected.count(sigma) == 1);
}

TEST_F(OrbitN3, EnumerationCounts) {
  EXPECT_EQ(orb.enumerate(Window{1, std::nullopt, std::nullopt}).size(), 54u);
  auto all = orb.enumerate(Window{2, std::nullopt, std::nullopt});
  ASSERT_EQ(all.size(), 150u);
  std::size_t recount = 0;
  for (const auto& p : all) recount += orb.degree(p) >= -2 && orb.degree(p) <= 2;
  EXPECT_EQ(orb.enumerate(Window{2, -2, 2}).size(), recount);
}

TEST_F(OrbitN3, OrthogonalPartnerSwaps) {
  Orbit o4(OrbitConfig{4, 7, {2, 1, 1}});
  Root b1{0, 1}, b3{2, 3};
  for (const auto& p : o4.enumerate(Window{1, std::nullopt, std::nullopt})) {
    if (!o4.is_admissible(p, b1) || !o4.is_admissible(o4.lambda_alpha(p, b1), b3)) continue;
    auto pr = partner_square(o4, p, b1, b3);
    EXPECT_EQ(pr.alpha2, b3);
    EXPECT_EQ(pr.beta2, b1);
    EXPECT_EQ(pr.tag, CaseTag::Orthogonal);
    EXPECT_EQ(make_square(o4, p, b1, b3).signature, 1);
  }
}

TEST_F(OrbitN3, PartnerClosesTheSquare) {
  for (const auto& sq : squares_in_box(orb, 2, KappaSource::SigmaLambda)) {
    OrbitPoint end1 = orb.lambda_alpha(orb.lambda_alpha(sq.lambda, sq.alpha), sq.beta);
    OrbitPoint end2 = orb.lambda_alpha(orb.lambda_alpha(sq.lambda, sq.alpha2), sq.beta2);
    EXPECT_EQ(end1, end2);
    EXPECT_EQ(orb.weight(end1), orb.weight(end2));
  }
}

TEST(Orbit, EpsilonR) {
  EXPECT_EQ(epsilon_r(6), -1);
  EXPECT_EQ(epsilon_r(7), 1);
}

TEST(Orbit, RankTwoHasTwoClasses) {
  Orbit o(OrbitConfig{2, 4, {1}});
  auto pts = o.enumerate(Window{0, std::nullopt, std::nullopt});
  EXPECT_EQ(pts.size(), 2u);
  EXPECT_TRUE(squares_in_box(o, 2, KappaSource::SigmaLambda).empty());
}

TEST(Orbit, ConfigValidation) {
  EXPECT_THROW(Orbit(OrbitConfig{3, 4, {2, 1}}), std::invalid_argument);  // r < n + 2
  EXPECT_THROW(Orbit(OrbitConfig{3, 6, {0, 1}}), std::invalid_argument);  // not strictly dominant
  EXPECT_THROW(Orbit(OrbitConfig{3, 6, {4, 2}}), std::invalid_argument);  // (Lambda, theta) >= r
  EXPECT_THROW(Orbit(OrbitConfig{3, 6, {2}}), std::invalid_argument);
}

// Exhaustive laws over windows at n = 3 and n = 4.
class OrbitLaws : public ::testing::TestWithParam<std::tuple<int, int, std::vector<int>>> {};

TEST_P(OrbitLaws, ChargeDegreeAndAdmissibility) {
  auto [n, r, lam] = GetParam();
  Orbit orb(OrbitConfig{n, r, lam});
  for (const auto& p : orb.enumerate(Window{n == 3 ? 2 : 1, std::nullopt, std::nullopt}))
    for (Root a : dws::rootsys::positive_roots(n)) {
      const int m = orb.m_alpha(p, a);
      EXPECT_GT(m, 0);
      EXPECT_LT(m, r);
      EXPECT_EQ(((m - orb.pairing(p, a)) % r + r) % r, 0);
      OrbitPoint q = orb.lambda_alpha(p, a);
      EXPECT_EQ(m + orb.m_alpha(q, a), r);
      OrbitPoint back = orb.lambda_alpha(q, a);
      EXPECT_EQ(back.sigma, p.sigma);
      EXPECT_EQ(orb.weight(back), orb.weight(p) - Rational(r) * dws::rootsys::root_vector(n, a));
      EXPECT_EQ(orb.weight(q), orb.weight(p) - Rational(m) * dws::rootsys::root_vector(n, a));
      const int d = orb.degree(q) - orb.degree(p);
      EXPECT_GT(d, 0);
      EXPECT_LT(d, 2 * a.height());
      EXPECT_EQ(orb.is_admissible(p, a), orb.admissible_by_degree(p, a));
      if (a.is_simple()) EXPECT_TRUE(orb.is_admissible(p, a));
      const int kap = orb.kappa(p, a);
      EXPECT_EQ(kap * r, m - orb.sigma_pairing(p.sigma, a));
      EXPECT_TRUE(kap == 0 || kap == 1);
    }
}

TEST_P(OrbitLaws, PartnerExistsAndIsUnique) {
  auto [n, r, lam] = GetParam();
  Orbit orb(OrbitConfig{n, r, lam});
  auto roots = dws::rootsys::positive_roots(n);
  for (const auto& p : orb.enumerate(Window{1, std::nullopt, std::nullopt}))
    for (Root a : roots) {
      if (!orb.admissible_by_degree(p, a)) continue;
      OrbitPoint q = orb.lambda_alpha(p, a);
      for (Root b : roots) {
        if (!orb.admissible_by_degree(q, b) || dws::rootsys::inner(a, b) == 2) continue;
        const auto target = orb.weight(orb.lambda_alpha(q, b));
        int found = 0;
        Root fa{}, fb{};
        for (Root a2 : roots) {
          if (a2 == a || !orb.admissible_by_degree(p, a2)) continue;
          OrbitPoint q2 = orb.lambda_alpha(p, a2);
          for (Root b2 : roots)
            if (orb.admissible_by_degree(q2, b2) && orb.weight(orb.lambda_alpha(q2, b2)) == target) {
              ++found;
              fa = a2;
              fb = b2;
            }
        }
        ASSERT_EQ(found, 1);
        auto pr = partner_square(orb, p, a, b);
        EXPECT_EQ(pr.alpha2, fa);
        EXPECT_EQ(pr.beta2, fb);
        EXPECT_EQ(partner_tag(partner_tag(pr.tag)), pr.tag);
      }
    }
}

INSTANTIATE_TEST_SUITE_P(Windows, OrbitLaws,
                         ::testing::Values(std::make_tuple(3, 5, std::vector<int>{2, 1}),
                                           std::make_tuple(3, 6, std::vector<int>{2, 1}),
                                           std::make_tuple(3, 7, std::vector<int>{1, 3}),
                                           std::make_tuple(4, 7, std::vector<int>{2, 1, 1}),
                                           std::make_tuple(4, 6, std::vector<int>{1, 1, 1})));

TEST(Orbit, WeightSignatureUsesFullPairing) {
  Orbit orb(OrbitConfig{3, 6, {2, 1}});
  for (const auto& p : orb.enumerate(Window{1, std::nullopt, std::nullopt}))
    for (Root a : dws::rootsys::positive_roots(3))
      EXPECT_EQ(orb.kappa(p, a, KappaSource::Weight) * 6, orb.m_alpha(p, a) - orb.pairing(p, a));
}

TEST(Orbit, SignatureParity) {
  // Odd r makes every signature +1.
  for (int r : {5, 7}) {
    Orbit orb(OrbitConfig{3, r, {2, 1}});
    for (auto src : {KappaSource::SigmaLambda, KappaSource::Weight})
      for (const auto& sq : squares_in_box(orb, 1, src)) EXPECT_EQ(sq.signature, 1);
  }
}
