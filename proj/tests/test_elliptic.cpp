#include "dws/elliptic.hpp"
#include "dws/sampling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace dws::star;
using dws::theta::ThetaParams;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

Vars draw(const FuncType& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SampleBox box;
  while (true) {
    Vars v = random_point(t, rng, box);
    if (well_separated(v, box)) return v;
  }
}

Kappa draw_kappa(int groups, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_kappa(groups, rng, SampleBox{});
}

int factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

// The *-product as a full-group average: every ordering of each group, the
// first |f_j| variables to f, normalized by the stabilizer order.
cplx star_by_full_average(const Algebra& alg, const EllipticFunction& f, const EllipticFunction& g, const Vars& v,
                          const Kappa& kap) {
  const Convention& c = alg.convention();
  const FuncType& tf = f.type();
  const FuncType& tg = g.type();
  const int G = static_cast<int>(tf.size());
  Kappa kf(kap);
  for (int j = 0; j < G; ++j) {
    int s = -2 * tg[j] + (j > 0 ? tg[j - 1] : 0) + (j + 1 < G ? tg[j + 1] : 0);
    kf[j] += c.kappa_unit * s;
  }
  std::vector<std::vector<int>> perm(G);
  for (int j = 0; j < G; ++j) {
    perm[j].resize(v[j].size());
    std::iota(perm[j].begin(), perm[j].end(), 0);
  }
  auto th = [&](cplx u) { return alg.th(u); };
  cplx total = 0.0;
  double norm = 1.0;
  for (int j = 0; j < G; ++j) norm *= factorial(tf[j]) * factorial(tg[j]);
  while (true) {
    Vars U(G), W(G);
    for (int j = 0; j < G; ++j)
      for (int t = 0; t < static_cast<int>(perm[j].size()); ++t)
        (t < tf[j] ? U[j] : W[j]).push_back(v[j][perm[j][t]]);
    cplx term = f(U, kf) * g(W, kap);
    for (int j = 0; j < G; ++j)
      for (cplx a : U[j]) {
        for (cplx b : W[j]) term *= th(a - b - c.delta) / th(a - b);
        if (j + 1 < G)
          for (cplx b : W[j + 1]) term *= th(a - b + c.delta / 2) / th(a - b);
        if (j > 0)
          for (cplx b : W[j - 1]) term *= c.neighbor_sign * th(a - b + c.delta / 2) / th(a - b);
      }
    total += term;
    int j = 0;
    while (j < G && !std::next_permutation(perm[j].begin(), perm[j].end())) ++j;
    if (j == G) break;
  }
  return total / norm;
}

}  // namespace

TEST(Elliptic, SingleVariableGenerator) {
  Algebra alg(3, ThetaParams{}, Convention::deformed(0.7));
  auto f = alg.generator(1, 0, {});
  Vars v{{}, {cplx(0.9, 0.2)}};
  Kappa kap{0.0, cplx(0.3, -0.1)};
  EXPECT_LT(rel(f(v, kap), alg.th(v[1][0] + 0.35 - kap[1])), 1e-14);
}

TEST(Elliptic, TwoNodeGeneratorHandExpansion) {
  for (double d : {1.0, 0.37}) {
    Algebra alg(3, ThetaParams{}, Convention::deformed(d));
    auto f = alg.generator(0, 1, {-1});
    for (std::uint64_t s = 0; s < 10; ++s) {
      Vars v = draw(f.type(), s);
      Kappa kap = draw_kappa(2, s + 100);
      cplx a = v[0][0], b = v[1][0];
      cplx expect = alg.th(a - b + d / 2) / alg.th(a - b) * alg.th(a - d / 2 - kap[0]) * alg.th(b + d / 2 - kap[1]);
      EXPECT_LT(rel(f(v, kap), expect), 1e-10);
    }
  }
}

TEST(Elliptic, InterleavingSumMatchesFullGroupAverage) {
  Algebra alg(3, ThetaParams{0.5, 6, 40}, Convention::deformed(0.83));
  std::vector<std::pair<EllipticFunction, EllipticFunction>> pairs{
      {alg.generator(0, 0, {}), alg.generator(0, 0, {})},
      {alg.generator(0, 1, {2}), alg.generator(0, 0, {})},
      {alg.generator(0, 1, {-1}), alg.generator(0, 1, {3})},
      {alg.star(alg.generator(0, 0, {}), alg.generator(1, 0, {})), alg.generator(0, 1, {1})},
  };
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    auto& [f, g] = pairs[t];
    auto fg = alg.star(f, g);
    for (std::uint64_t s = 0; s < 5; ++s) {
      Vars v = draw(fg.type(), 10 * t + s);
      Kappa kap = draw_kappa(2, 77 + s);
      EXPECT_LT(rel(fg(v, kap), star_by_full_average(alg, f, g, v, kap)), 1e-11) << fg.label();
    }
  }
  // Screening conventions too.
  Algebra scr(3, ThetaParams{0.5, 6, 40}, Convention::screening(6));
  auto f = scr.generator(0, 1, {1}), g = scr.generator(1, 0, {});
  auto fg = scr.star(f, g);
  for (std::uint64_t s = 0; s < 5; ++s) {
    Vars v = draw(fg.type(), 300 + s);
    Kappa kap = draw_kappa(2, 400 + s);
    EXPECT_LT(rel(fg(v, kap), star_by_full_average(scr, f, g, v, kap)), 1e-11);
  }
}

TEST(Elliptic, SimpleQuadraticRelations) {
  for (double d : {1.0, 0.61}) {
    Algebra alg(3, ThetaParams{}, Convention::deformed(d));
    auto f1 = alg.generator(0, 0, {}), f2 = alg.generator(1, 0, {});
    auto r1 = compare(alg.star(f1, f2), alg.generator(0, 1, {-1}), 20, 1, SampleBox{});
    auto r2 = compare(alg.star(f2, f1), alg.generator(0, 1, {0}), 20, 2, SampleBox{});
    EXPECT_LT(r1.max_rel, 1e-9);
    EXPECT_LT(r2.max_rel, 1e-9);
  }
}

TEST(Elliptic, ZeroShiftIsCommutative) {
  Algebra alg(3, ThetaParams{}, Convention::deformed(0.0));
  auto f = alg.generator(0, 1, {2}), g = alg.generator(0, 0, {});
  EXPECT_LT(compare(alg.star(f, g), alg.star(g, f), 20, 3, SampleBox{}).max_rel, 1e-9);
  // The k dependence collapses to a constant ratio.
  auto h1 = alg.generator(0, 1, {2}), h2 = alg.generator(0, 1, {-3});
  Kappa kap{0.1, 0.2};
  cplx ratio0 = 0.0;
  for (std::uint64_t s = 0; s < 5; ++s) {
    Vars v = draw(h1.type(), 50 + s);
    cplx ratio = h1(v, kap) / h2(v, kap);
    if (s == 0) ratio0 = ratio;
    EXPECT_LT(rel(ratio, ratio0), 1e-10);
  }
}

TEST(Elliptic, Associativity) {
  Algebra alg(4, ThetaParams{}, Convention::deformed(0.9));
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> kd(-2, 2), id(0, 2);
  for (int t = 0; t < 6; ++t) {
    auto gen = [&] {
      int i = id(rng);
      int m = std::min(int(rng() % 2), 2 - i);
      std::vector<int> k(m);
      for (int& x : k) x = kd(rng);
      return alg.generator(i, m, k);
    };
    auto f = gen(), g = gen(), h = gen();
    auto lhs = alg.star(alg.star(f, g), h), rhs = alg.star(f, alg.star(g, h));
    EXPECT_LT(compare(lhs, rhs, 10, 500 + t, SampleBox{}).max_rel, 1e-8);
  }
}

TEST(Elliptic, SameGroupSymmetry) {
  Algebra alg(3, ThetaParams{}, Convention::deformed(1.0));
  auto f = alg.power(2, 0, 1, {1});
  for (std::uint64_t s = 0; s < 10; ++s) {
    Vars v = draw(f.type(), 900 + s);
    Kappa kap = draw_kappa(2, 950 + s);
    Vars w = v;
    std::swap(w[0][0], w[0][1]);
    EXPECT_LT(rel(f(v, kap), f(w, kap)), 1e-11);
    w = v;
    std::swap(w[1][0], w[1][1]);
    EXPECT_LT(rel(f(v, kap), f(w, kap)), 1e-11);
  }
}

TEST(Elliptic, NoZeroDivisors) {
  Algebra alg(3, ThetaParams{}, Convention::deformed(1.0));
  auto f = alg.generator(0, 1, {0}), g = alg.generator(0, 1, {0});
  auto fg = alg.star(f, g);
  int tiny = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Vars v = draw(fg.type(), 2000 + s);
    tiny += std::abs(fg(v, draw_kappa(2, 3000 + s))) < 1e-12;
  }
  EXPECT_LT(tiny, 50);
}

TEST(Elliptic, UnitAndTypes) {
  Algebra alg(3, ThetaParams{}, Convention::deformed(1.0));
  auto f = alg.generator(0, 1, {1});
  EXPECT_EQ(alg.star(alg.unit(), f).node(), f.node());
  EXPECT_EQ(alg.star(f, alg.generator(1, 0, {})).type(), (FuncType{1, 2}));
  EXPECT_EQ(alg.power(3, 0, 0, {}).total(), 3);
  EXPECT_EQ(alg.power(0, 0, 0, {}).total(), 0);
  EXPECT_THROW(alg.generator(1, 1, {0}), std::invalid_argument);
  EXPECT_THROW(alg.generator(0, 1, {}), std::invalid_argument);
  Algebra other(4, ThetaParams{}, Convention::deformed(1.0));
  EXPECT_THROW(alg.star(f, other.generator(0, 0, {})), std::invalid_argument);
  EXPECT_THROW(f(Vars{{1.0}}, Kappa{0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(compare(f, alg.generator(0, 0, {}), 3, 1, SampleBox{}), std::invalid_argument);
}

TEST(Elliptic, CancelledCoincidence) {
  Algebra alg(3, ThetaParams{}, Convention::deformed(1.0));
  auto f = alg.power(2, 0, 0, {});
  Kappa kap{0.2, 0.0};
  cplx u(1.3, 0.1);
  cplx at = f.evaluate_safe(Vars{{u, u}, {}}, kap);
  cplx near = f(Vars{{u + 1e-3, u - 1e-3}, {}}, kap);
  EXPECT_TRUE(std::isfinite(at.real()));
  EXPECT_LT(rel(at, near), 1e-5);
}

TEST(Elliptic, TwoPowerOrderings) {
  for (double d : {1.0, 0.45}) {
    Algebra alg(3, ThetaParams{}, Convention::deformed(d));
    for (int a = 2; a <= 3; ++a) {
      auto desc = alg.power(a, 0, 1, {2}), asc = alg.power(a, 0, 1, {2}, true);
      EXPECT_LT(compare(desc, asc, 10, 40 + a, SampleBox{}).max_rel, 1e-9);
    }
  }
}
