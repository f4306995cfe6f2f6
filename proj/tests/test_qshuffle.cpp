#include "dws/qshuffle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dws::qsh;

namespace {

QLaurent q(int e, QLaurent::Coeff c = 1) { return QLaurent::monomial(e, c); }

// Shuffle by explicit position subsets: the letters of v occupy the chosen
// slots and every v letter placed before a u letter contributes its pairing.
QElement shuffle_oracle(int n, const Word& u, const Word& v) {
  const std::size_t L = u.size() + v.size();
  QElement out(n);
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != v.size()) continue;
    Word w;
    int e = 0;
    std::size_t iu = 0, iv = 0;
    for (std::size_t p = 0; p < L; ++p) {
      if ((mask >> p) & 1u) {
        w.push_back(v[iv++]);
      } else {
        for (std::size_t t = 0; t < iv; ++t) e += letter_pairing(n, v[t], u[iu]);
        w.push_back(u[iu++]);
      }
    }
    out += QElement::word(n, w, q(e));
  }
  return out;
}

Word random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> letter(1, n - 1);
  Word w(len);
  for (int& x : w) x = letter(rng);
  return w;
}

QElement random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> len(0, 3), e(-3, 3), c(-2, 2);
  QElement out(n);
  for (int t = 0; t < 3; ++t) out += QElement::word(n, random_word(rng, n, len(rng)), q(e(rng), c(rng)));
  return out;
}

}  // namespace

TEST(QLaurent, Arithmetic) {
  EXPECT_EQ(QLaurent::qint(2), q(1) + q(-1));
  EXPECT_EQ(QLaurent::qint(3), q(2) + q(0) + q(-2));
  EXPECT_TRUE(QLaurent::qint(0).is_zero());
  EXPECT_EQ(QLaurent::qint(-2), -QLaurent::qint(2));
  EXPECT_EQ((q(1) + 1) * (q(1) - 1), q(2) - 1);
  EXPECT_EQ(q(3).shifted(-5), q(-2));
  EXPECT_TRUE((q(2) - q(2)).is_zero());
  EXPECT_EQ(QLaurent::qint(4).coeff(1), 1);
  EXPECT_NEAR(std::abs(QLaurent::qint(3).evaluate(2.0) - 5.25), 0.0, 1e-12);
}

TEST(QLaurent, CyclotomicReduction) {
  for (int r : {3, 4, 5, 6, 7}) {
    const QLaurent::Coeff s = (r % 2 == 1) ? 1 : -1;
    EXPECT_EQ(q(r).reduce_cyclotomic(r), QLaurent(s)) << r;
    EXPECT_EQ(q(-1).reduce_cyclotomic(r), q(r - 1, s)) << r;
    const QLaurent red = (q(-7) + q(11, 3) + q(2)).reduce_cyclotomic(r);
    for (const auto& [e, c] : red.terms()) {
      EXPECT_GE(e, 0);
      EXPECT_LT(e, r);
      (void)c;
    }
  }
}

TEST(QShuffle, MatchesOracleOnRandomWords) {
  std::mt19937 rng(11);
  for (int n : {3, 4, 5})
    for (int t = 0; t < 40; ++t) {
      Word u = random_word(rng, n, t % 4), v = random_word(rng, n, (t / 4) % 4);
      EXPECT_EQ(QElement::word(n, u) * QElement::word(n, v), shuffle_oracle(n, u, v));
    }
}

TEST(QShuffle, SmallProducts) {
  const int n = 3;
  auto I = [&](const Word& w) { return QElement::word(n, w); };
  EXPECT_EQ(I({1, 2}) * I({1}), QLaurent::qint(2) * I({1, 1, 2}) + I({1, 2, 1}));
  EXPECT_EQ(I({1}) * I({2, 1}), I({1, 2, 1}) + QLaurent::qint(2) * I({2, 1, 1}));
  EXPECT_EQ(I({1}) * I({1}), (q(0) + q(2)) * I({1, 1}));
  EXPECT_EQ(I({1}) * I({2}), I({1, 2}) + q(-1) * I({2, 1}));
}

TEST(QShuffle, BasicGeneratorsInWords) {
  const int n = 3;
  for (int k = -4; k <= 4; ++k) {
    QElement x = basic_X(n, 1, 1, {k});
    EXPECT_EQ(x, q(-k - 1) * QElement::word(n, {1, 2}) + q(k) * QElement::word(n, {2, 1}));
    QElement lhs = simple_X(n, 1) * x;
    QElement rhs = (q(-k - 1) + q(-k + 1)) * QElement::word(n, {1, 1, 2}) + (q(-k) + q(k)) * QElement::word(n, {1, 2, 1}) +
                   (q(k + 1) + q(k - 1)) * QElement::word(n, {2, 1, 1});
    EXPECT_EQ(lhs, rhs) << k;
  }
  EXPECT_EQ(basic_X(4, 2, 0, {}), simple_X(4, 2));
  EXPECT_EQ(basic_X(4, 1, 2, {0, 0}).size(), 6u);
  EXPECT_THROW(basic_X(3, 2, 1, {0}), std::out_of_range);
  EXPECT_THROW(basic_X(4, 1, 2, {0}), std::invalid_argument);
}

TEST(QShuffle, NestedBracketsGiveBasicGenerators) {
  for (int k = -5; k <= 5; ++k) EXPECT_EQ(nested_bracket(3, 1, 1, {k}), basic_X(3, 1, 1, {k})) << k;
  for (int k1 = -3; k1 <= 3; ++k1)
    for (int k2 = -3; k2 <= 3; ++k2)
      EXPECT_EQ(nested_bracket(4, 1, 2, {k1, k2}), basic_X(4, 1, 2, {k1, k2})) << k1 << "," << k2;
  // Two-letter bracket by hand.
  for (int k = -3; k <= 3; ++k)
    EXPECT_EQ(bracket(simple_X(3, 1), simple_X(3, 2), k),
              (-QLaurent::qint(k)) * (simple_X(3, 1) * simple_X(3, 2)) +
                  QLaurent::qint(k + 1) * (simple_X(3, 2) * simple_X(3, 1)));
}

TEST(QShuffle, SerreRelations) {
  for (int n : {3, 4, 5})
    for (int i = 1; i <= n - 1; ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        QElement a = simple_X(n, i), b = simple_X(n, j);
        QElement serre = a * a * b - QLaurent::qint(2) * (a * b * a) + b * a * a;
        EXPECT_TRUE(serre.is_zero()) << n << " " << i << " " << j << ": " << serre.to_string();
      }
  // Distant letters commute.
  EXPECT_TRUE(commutator(simple_X(4, 1), simple_X(4, 3)).is_zero());
  EXPECT_FALSE(commutator(simple_X(4, 1), simple_X(4, 2)).is_zero());
}

TEST(QShuffle, RingLaws) {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = 3 + t % 2;
    QElement a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(QElement::unit(n) * a, a);
    EXPECT_EQ(a * QElement::unit(n), a);
    for (int r : {5, 6}) {
      EXPECT_EQ((a * b).reduce_cyclotomic(r), (a.reduce_cyclotomic(r) * b.reduce_cyclotomic(r)).reduce_cyclotomic(r));
    }
  }
}

TEST(QShuffle, Powers) {
  QElement x = basic_X(3, 1, 1, {2});
  EXPECT_EQ(pow(x, 0), QElement::unit(3));
  EXPECT_EQ(pow(x, 3), x * x * x);
  EXPECT_EQ(power_X(3, 1, 1, {2}, 2), basic_X(3, 1, 1, {2}) * basic_X(3, 1, 1, {1}));
  EXPECT_THROW(power_X(3, 1, 1, {2}, -1), std::invalid_argument);
  EXPECT_THROW(QElement(3) * QElement(4), std::invalid_argument);
  EXPECT_THROW(QElement::word(3, {3}), std::out_of_range);
}
