#include "mtz/bern_products.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace mtz;

namespace {

void for_grid(int max_len, int max_entry, const std::function<void(const std::vector<int>&)>& f) {
  for (int l = 2; l <= max_len; ++l) {
    std::vector<int> s(l, 1);
    while (true) {
      f(s);
      int a = 0;
      while (a < l && s[a] == max_entry) s[a++] = 1;
      if (a == l) break;
      ++s[a];
    }
  }
}

}  // namespace

TEST(NaiveProduct, Examples) {
  std::vector<int> s11{1, 1}, s22{2, 2}, s5{5};
  auto a = naive_product(s11);
  EXPECT_EQ(a.terms, (std::map<int, Rational>{{2, 1}}));
  EXPECT_EQ(a.constant, Rational(1, 12));
  auto b = naive_product(s22);
  EXPECT_EQ(b.terms, (std::map<int, Rational>{{2, Rational(1, 3)}, {4, 1}}));
  EXPECT_EQ(b.constant, Rational(1, 180));
  auto c = naive_product(s5);
  EXPECT_EQ(c.terms, (std::map<int, Rational>{{5, 1}}));
  EXPECT_EQ(c.constant, 0);
}

TEST(Carlitz, MatchesNaiveAndSymmetric) {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      std::vector<int> s{a, b};
      EXPECT_EQ(carlitz_expand(a, b), naive_product(s)) << a << "," << b;
      EXPECT_EQ(carlitz_expand(a, b), carlitz_expand(b, a));
    }
}

TEST(BerProd, SmallGrid) {
  for_grid(3, 4, [](const std::vector<int>& s) {
    EXPECT_EQ(berprod_expand(s), naive_product(s)) << ::testing::PrintToString(s);
  });
}

TEST(BernProdNice, SmallGrid) {
  for_grid(3, 5, [](const std::vector<int>& s) {
    EXPECT_EQ(bernprodnice_expand(s), naive_product(s)) << ::testing::PrintToString(s);
  });
}

TEST(BernProdNice, PairReproducesCarlitzTermwise) {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      std::vector<int> s{a, b};
      auto terms = bernprodnice_terms(s);
      BernCombo lit;
      int konst = 0;
      for (auto& t : terms) {
        if (t.degree < 0) {
          ++konst;
          lit.constant += t.coeff;
        } else {
          lit.add(t.degree, t.coeff);
        }
      }
      EXPECT_LE(konst, 1);
      EXPECT_EQ(lit, carlitz_expand(a, b));
    }
}

TEST(BernProdNice, WeightHomogeneity) {
  for_grid(4, 3, [](const std::vector<int>& s) {
    int w = std::accumulate(s.begin(), s.end(), 0);
    for (auto& t : bernprodnice_terms(s)) {
      int deg = t.degree < 0 ? 0 : t.degree;
      EXPECT_EQ(t.bern_weight + deg, w);
    }
  });
}

TEST(BernProducts, PermutationInvariance) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int t = 2 + static_cast<int>(rng() % 3);
    std::vector<int> s(t);
    for (int& v : s) v = 1 + static_cast<int>(rng() % 5);
    auto ref = bernprodnice_expand(s);
    auto refb = berprod_expand(s);
    std::shuffle(s.begin(), s.end(), rng);
    EXPECT_EQ(bernprodnice_expand(s), ref);
    EXPECT_EQ(berprod_expand(s), refb);
  }
}
