#include "mtz/exact.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

using namespace mtz;

namespace {

// Coefficients of t/(e^t - 1) by inverting the series sum_k t^k/(k+1)!.
std::vector<Rational> bernoulli_by_series(int order) {
  std::vector<Rational> d(order + 1), inv(order + 1);
  for (int k = 0; k <= order; ++k) d[k] = Rational(1) / Rational(factorial(k + 1));
  inv[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += d[k] * inv[n - k];
    inv[n] = -acc;
  }
  for (int n = 0; n <= order; ++n) inv[n] *= Rational(factorial(n));
  return inv;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Rational integrate01(const std::vector<Rational>& p) {
  Rational acc = 0;
  for (std::size_t k = 0; k < p.size(); ++k) acc += p[k] / Rational(k + 1);
  return acc;
}

}  // namespace

TEST(Bernoulli, SmallValues) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(7), 0);
  EXPECT_EQ(bernoulli(10), Rational(5, 66));
}

TEST(Bernoulli, TwelveMatchesSeries) {
  auto series = bernoulli_by_series(12);
  EXPECT_EQ(series[12], Rational(-691, 2730));
  EXPECT_EQ(bernoulli(12), series[12]);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(bernoulli(n), series[n]) << n;
}

TEST(Bernoulli, DefiningRecurrence) {
  for (int n = 1; n <= 40; ++n) {
    Rational acc = 0;
    for (int k = 0; k <= n; ++k) acc += Rational(binomial(n + 1, k)) * bernoulli(k);
    EXPECT_EQ(acc, 0) << n;
  }
}

TEST(Bernoulli, ConcurrentReaders) {
  std::vector<std::thread> ts;
  std::vector<Rational> got(8);
  for (int i = 0; i < 8; ++i)
    ts.emplace_back([i, &got] { got[i] = bernoulli(30 + 2 * i); });
  for (auto& t : ts) t.join();
  auto series = bernoulli_by_series(44);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(got[i], series[30 + 2 * i]);
}

TEST(Binomial, Conventions) {
  EXPECT_EQ(binomial(0, -1), 0);
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_THROW(binomial(-1, 0), std::invalid_argument);
  // complementary index: a=3, b=2, r=1
  EXPECT_EQ(binomial(3 + 2 - 2 - 1, 3 - 2), 2);
  EXPECT_EQ(binomial(3 + 2 - 2 - 1, 2 - 1), 2);
}

TEST(Multinomial, NegativePartIsZero) {
  std::vector<long> a{2, 1, 1}, b{2, -1, 3}, c{};
  EXPECT_EQ(multinomial(a), 12);
  EXPECT_EQ(multinomial(b), 0);
  EXPECT_EQ(multinomial(c), 1);
}

TEST(BernoulliPoly, Coefficients) {
  EXPECT_EQ(bernoulli_poly(0), std::vector<Rational>{1});
  std::vector<Rational> b2{Rational(1, 6), -1, 1};
  EXPECT_EQ(bernoulli_poly(2), b2);
}

TEST(BernoulliPoly, DerivativeAndValueAtZero) {
  auto b5 = bernoulli_poly(5);
  auto b4 = bernoulli_poly(4);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(b5[k] * k, 5 * b4[k - 1]);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(poly_eval(bernoulli_poly(n), 0), bernoulli(n));
}

TEST(CConst, Examples) {
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> s{n};
    EXPECT_EQ(c_const(s), 0);
  }
  std::vector<int> s11{1, 1}, s22{2, 2};
  EXPECT_EQ(c_const(s11), Rational(1, 12));
  EXPECT_EQ(c_const(s22), Rational(1, 180));
}

TEST(CConst, MatchesDirectIntegration) {
  for (int l = 1; l <= 3; ++l) {
    std::vector<int> s(l, 1);
    while (true) {
      std::vector<Rational> prod{1};
      for (int v : s) prod = poly_mul(prod, bernoulli_poly(v));
      EXPECT_EQ(c_const(s), integrate01(prod));
      int a = 0;
      while (a < l && s[a] == 5) s[a++] = 1;
      if (a == l) break;
      ++s[a];
    }
  }
}

TEST(RationalText, ParseAndPrint) {
  EXPECT_EQ(parse_rational("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(to_string(Rational(-2, 3)), "-2/3");
  EXPECT_EQ(frac_part(Rational(-1, 3)), Rational(2, 3));
  EXPECT_EQ(frac_part(Rational(5, 3)), Rational(2, 3));
}
