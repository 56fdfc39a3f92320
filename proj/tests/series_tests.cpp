#include <random>

#include <gtest/gtest.h>

#include "bandlink/series.hpp"
#include "oracles.hpp"

using namespace bandlink;

TEST(Series, OneAndZero) {
  TruncatedSeries one = series_one(4, false);
  EXPECT_TRUE(one.is_one());
  EXPECT_FALSE(one.is_zero());
  EXPECT_EQ(one.at({}), 1);
  TruncatedSeries zero = series_zero(4, false);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.at({1}), 0);
}

TEST(Series, TruncationKeepsDegreesBelowMax) {
  // max_degree L keeps monomials of length <= L-1.
  TruncatedSeries m3 = series_monomial({1, 2, 3}, 5, 4, false);
  EXPECT_EQ(m3.at({1, 2, 3}), 5);
  TruncatedSeries m4 = series_monomial({1, 2, 3, 4}, 5, 4, false);
  EXPECT_TRUE(m4.is_zero());
}

TEST(Series, MulIsNoncommutative) {
  TruncatedSeries x = generator_series(1, 1, 3, false);
  TruncatedSeries y = generator_series(2, 1, 3, false);
  TruncatedSeries xy = mul(x, y);
  TruncatedSeries yx = mul(y, x);
  EXPECT_EQ(xy.at({1, 2}), 1);
  EXPECT_EQ(xy.at({2, 1}), 0);
  EXPECT_EQ(yx.at({2, 1}), 1);
  EXPECT_FALSE(xy == yx);
}

TEST(Series, MulMatchesNaiveOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    bool rf = trial % 2 == 0;
    int L = 2 + (int)(rng() % 4);
    auto random_series = [&] {
      TruncatedSeries s = series_zero(L, rf);
      for (int t = 0; t < 6; ++t) {
        Monomial m;
        int deg = (int)(rng() % (std::uint64_t)L);
        for (int u = 0; u < deg; ++u) m.push_back(1 + (int)(rng() % 4));
        if (rf && has_repeat(m)) continue;
        s.coeff[m] += (std::int64_t)(rng() % 7) - 3;
        if (s.coeff[m] == 0) s.coeff.erase(m);
      }
      return s;
    };
    TruncatedSeries a = random_series(), b = random_series();
    EXPECT_TRUE(mul(a, b) == oracle::naive_mul(a, b)) << "trial " << trial;
  }
}

TEST(Series, RepeatFreeDropsRepeats) {
  TruncatedSeries x = generator_series(1, 1, 4, true);
  TruncatedSeries xx = mul(x, x);
  // (1 + X1)^2 = 1 + 2 X1 in the reduced algebra: X1 X1 dies.
  EXPECT_EQ(xx.at({1}), 2);
  EXPECT_EQ(xx.at({1, 1}), 0);
}

TEST(Series, NegativeGeneratorPlainIsGeometricSeries) {
  TruncatedSeries s = generator_series(1, -1, 4, false);
  EXPECT_EQ(s.at({}), 1);
  EXPECT_EQ(s.at({1}), -1);
  EXPECT_EQ(s.at({1, 1}), 1);
  EXPECT_EQ(s.at({1, 1, 1}), -1);
}

TEST(Series, NegativeGeneratorRepeatFreeIsExactlyOneMinusX) {
  TruncatedSeries s = generator_series(1, -1, 6, true);
  EXPECT_EQ(s.at({}), 1);
  EXPECT_EQ(s.at({1}), -1);
  EXPECT_EQ((int)s.coeff.size(), 2);
}

TEST(Series, InverseIsTwoSided) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    bool rf = trial % 2 == 1;
    int L = 2 + (int)(rng() % 4);
    TruncatedSeries s = series_one(L, rf);
    for (int t = 0; t < 5; ++t) {
      Monomial m;
      int deg = 1 + (int)(rng() % (std::uint64_t)(L - 1));
      for (int u = 0; u < deg; ++u) m.push_back(1 + (int)(rng() % 3));
      if ((int)m.size() >= L) continue;
      if (rf && has_repeat(m)) continue;
      s.coeff[m] += (std::int64_t)(rng() % 5) - 2;
      if (s.coeff[m] == 0) s.coeff.erase(m);
    }
    TruncatedSeries inv = inverse(s);
    EXPECT_TRUE(mul(s, inv).is_one()) << "trial " << trial;
    EXPECT_TRUE(mul(inv, s).is_one()) << "trial " << trial;
  }
}

TEST(Series, GeneratorTimesInverseIsOne) {
  for (bool rf : {false, true})
    for (int exp : {1, -1}) {
      TruncatedSeries g = generator_series(1, exp, 5, rf);
      TruncatedSeries h = generator_series(1, -exp, 5, rf);
      EXPECT_TRUE(mul(g, h).is_one()) << rf << " " << exp;
    }
}

TEST(Series, MagnusExpandMatchesNaive) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    bool rf = trial % 2 == 0;
    int L = 2 + (int)(rng() % 4);
    std::vector<Letter> word;
    int len = (int)(rng() % 7);
    for (int t = 0; t < len; ++t) word.push_back({1 + (int)(rng() % 4), rng() % 2 == 0 ? 1 : -1});
    EXPECT_TRUE(magnus_expand(word, L, rf) == oracle::naive_expand(word, L, rf)) << "trial " << trial;
  }
}

TEST(Series, MagnusKernelWordTimesInverse) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    bool rf = trial % 2 == 0;
    int L = 2 + (int)(rng() % 5);
    std::vector<Letter> word;
    int len = (int)(rng() % 9);
    for (int t = 0; t < len; ++t) word.push_back({1 + (int)(rng() % 5), rng() % 2 == 0 ? 1 : -1});
    std::vector<Letter> w = word;
    std::vector<Letter> winv = word_inverse(word);
    w.insert(w.end(), winv.begin(), winv.end());
    EXPECT_TRUE(magnus_expand(w, L, rf).is_one()) << "trial " << trial;
  }
}

TEST(Series, CommutatorLeadingTerm) {
  // [x, y] = 1 + (XY - YX) + higher order.
  std::vector<Letter> w{{1, 1}, {2, 1}, {1, -1}, {2, -1}};
  TruncatedSeries s = magnus_expand(w, 3, false);
  EXPECT_EQ(s.at({}), 1);
  EXPECT_EQ(s.at({1}), 0);
  EXPECT_EQ(s.at({2}), 0);
  EXPECT_EQ(s.at({1, 2}), 1);
  EXPECT_EQ(s.at({2, 1}), -1);
}

TEST(Series, IncompatibleOperandsRejected) {
  TruncatedSeries a = series_one(3, false);
  TruncatedSeries b = series_one(4, false);
  EXPECT_THROW(mul(a, b), Error);
  TruncatedSeries c = series_one(3, true);
  EXPECT_THROW(add(a, c), Error);
}

TEST(Series, InverseNeedsUnitConstantTerm) {
  TruncatedSeries s = series_zero(3, false);
  EXPECT_THROW(inverse(s), Error);
}

TEST(Series, CoefficientOverflowDetected) {
  TruncatedSeries big = series_monomial({1}, (std::int64_t)1 << 62, 3, false);
  EXPECT_THROW(add(big, big), Error);
  TruncatedSeries a = series_monomial({1}, (std::int64_t)1 << 40, 3, false);
  TruncatedSeries b = series_monomial({2}, (std::int64_t)1 << 40, 3, false);
  EXPECT_THROW(mul(a, b), Error);
}
