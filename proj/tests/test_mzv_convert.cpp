#include "mtz/mzv_convert.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace mtz;

namespace {

using cd = std::complex<double>;

cd phase(const Rational& c, long m) {
  return std::polar(1.0, 2 * std::numbers::pi * c.convert_to<double>() * static_cast<double>(m));
}

Atom Z(std::vector<long> e) {
  std::vector<AffineExp> x;
  for (long v : e) x.push_back(iexp(v));
  return mzv(std::move(x), std::vector<Rational>(e.size(), Rational(0)));
}

// MT summed over m_1 + ... + m_k <= N.
cd mt_truncated(const std::vector<long>& s, const std::vector<Rational>& c, int N) {
  std::size_t k = s.size() - 1;
  std::vector<long> m(k, 1);
  cd acc = 0;
  while (true) {
    long M = 0;
    cd term = 1;
    for (std::size_t j = 0; j < k; ++j) {
      M += m[j];
      term *= phase(c[j], m[j]) * std::pow(static_cast<double>(m[j]), -static_cast<double>(s[j]));
    }
    if (M <= N) acc += term * phase(c[k], M) * std::pow(static_cast<double>(M), -static_cast<double>(s[k]));
    std::size_t j = 0;
    while (j < k && m[j] == N) m[j++] = 1;
    if (j == k) break;
    ++m[j];
  }
  return acc;
}

// Colored MZV over N >= n_1 > ... > n_k >= 1, by nested prefix sums.
cd mzv_truncated(const Atom& a, int N) {
  std::size_t k = a.exps.size();
  std::vector<cd> below(N + 1, 1.0);  // sum of deeper chains with all indices < n
  for (std::size_t d = k; d-- > 0;) {
    std::vector<cd> cur(N + 1, 0.0);
    cd run = 0;
    for (int n = 1; n <= N; ++n) {
      cur[n] = run;
      run += below[n] * phase(a.colors[d], n) * std::pow(static_cast<double>(n), -static_cast<double>(a.exps[d].a));
    }
    if (d == 0) return run;
    // next level needs prefix sums strictly below n
    below = cur;
  }
  return 0;
}

cd expr_truncated(const Expr& e, int N) {
  cd acc = 0;
  for (auto& [key, c] : e.terms()) {
    cd t = c.convert_to<double>();
    for (auto& a : key) t *= mzv_truncated(a, N);
    acc += t;
  }
  return acc;
}

}  // namespace

TEST(PerSum, Orders) {
  std::vector<std::vector<long>> seen;
  per_sum({1, 2, 3}, [&](const std::vector<long>& v) {
    seen.push_back(v);
    return Expr();
  });
  EXPECT_EQ(seen, (std::vector<std::vector<long>>{{2, 3, 1}, {1, 3, 2}, {1, 2, 3}}));
  Expr sym = per_sum({4, 4, 4}, [](const std::vector<long>&) { return Expr(Z({5, 7}), 1); });
  EXPECT_EQ(sym, Expr(Z({5, 7}), 3));
}

TEST(PartialFraction, ExactOnGrid) {
  for (long a = 1; a <= 5; ++a)
    for (long b = 1; b <= 5; ++b) {
      auto terms = pf_split(a, b);
      for (long x = 1; x <= 20; ++x)
        for (long y = 1; y <= 20; ++y) {
          Rational lhs(Integer(1), Integer(pow(Integer(x), a) * pow(Integer(y), b)));
          Rational rhs = 0;
          for (auto& t : terms) {
            Integer kept = pow(Integer(t.keep_first ? x : y), t.kept_exp);
            rhs += Rational(t.coeff, kept * pow(Integer(x + y), t.union_exp));
          }
          ASSERT_EQ(lhs, rhs) << a << " " << b << " " << x << " " << y;
        }
    }
}

TEST(Depth2, Examples) {
  EXPECT_EQ(mt_to_mzv_depth2(1, 1, 1), Expr(Z({2, 1}), 2));
  Expr e;
  e.add_term(2, {Z({3, 2})});
  e.add_term(4, {Z({4, 1})});
  EXPECT_EQ(mt_to_mzv_depth2(2, 2, 1), e);
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b) EXPECT_EQ(mt_to_mzv_depth2(a, b, 2), mt_to_mzv_depth2(b, a, 2));
  EXPECT_THROW(mt_to_mzv_depth2(0, 1, 1), std::invalid_argument);
}

TEST(Depth3, MordellShape) {
  EXPECT_EQ(mt_to_mzv_depth3(1, 1, 1, 1), Expr(Z({2, 1, 1}), 6));
}

TEST(General, MatchesDepth2) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 3; ++c)
        EXPECT_EQ(mt_to_mzv_general({a, b, c}, {0, 0, 0}), mt_to_mzv_depth2(a, b, c)) << a << b << c;
}

TEST(General, MatchesDepth3) {
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 3; ++b)
      for (long c = 1; c <= 2; ++c)
        for (long d = 1; d <= 2; ++d) {
          Expr g = mt_to_mzv_general({a, b, c, d}, {0, 0, 0, 0});
          Expr t = mt_to_mzv_depth3(a, b, c, d);
          EXPECT_LT(std::abs(expr_truncated(g, 40) - expr_truncated(t, 40)), 1e-11) << a << b << c << d;
        }
  EXPECT_EQ(mt_to_mzv_general({2, 2, 2, 2}, {0, 0, 0, 0}), mt_to_mzv_depth3(2, 2, 2, 2));
}

TEST(General, WeightAndDepthConserved) {
  std::vector<std::vector<long>> cases{{1, 2, 3}, {2, 1, 1, 4}, {3, 3, 3, 3, 3}, {1, 1, 1, 1, 1}};
  for (auto& s : cases) {
    long w = 0;
    for (long v : s) w += v;
    std::vector<Rational> c(s.size(), Rational(0));
    c.back() = Rational(1, 3);
    c[0] = Rational(1, 2);
    Expr e = mt_to_mzv_general(s, c);
    for (auto& [key, coeff] : e.terms()) {
      ASSERT_EQ(key.size(), 1u);
      EXPECT_EQ(key[0].kind, AtomKind::MZV);
      EXPECT_EQ(key[0].weight_const(), w);
      EXPECT_EQ(key[0].exps.size(), s.size() - 1);
      if (key[0].colors[0] == 0) EXPECT_GE(key[0].exps[0].a, 2);
    }
  }
}

TEST(General, FiniteTruncationIsExact) {
  std::vector<Rational> pal{0, Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4)};
  unsigned seed = 12345;
  auto rnd = [&](unsigned n) {
    seed = seed * 1103515245u + 12345u;
    return (seed >> 16) % n;
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t k = 2 + rnd(2);
    std::vector<long> s;
    std::vector<Rational> c;
    for (std::size_t j = 0; j <= k; ++j) {
      s.push_back(1 + rnd(3));
      c.push_back(pal[rnd(pal.size())]);
    }
    Expr e = mt_to_mzv_general(s, c);
    int N = 18;
    EXPECT_LT(std::abs(mt_truncated(s, c, N) - expr_truncated(e, N)), 1e-12) << trial;
  }
}

TEST(General, DepthOneIsLerch) {
  EXPECT_EQ(mt_to_mzv_general({2, 3}, {Rational(1, 3), Rational(1, 2)}),
            Expr(mzv({iexp(5)}, {Rational(5, 6)})));
}

TEST(General, ConvergenceDomain) {
  EXPECT_TRUE(mt_converges({1, 1}, 1));
  EXPECT_FALSE(mt_converges({0.5, 0.5}, 0.5));
  EXPECT_FALSE(mt_converges({2, 0.2}, 0.7));
  EXPECT_TRUE(mt_converges({2, 0.2}, 0.9));
}

TEST(ConvertAtoms, ReplacesOnlyZFree) {
  Expr e;
  e.add_term(3, {mt({1, 1, 1})});
  e.add_term(1, {even_zeta(2), mt({iexp(1), zexp(), iexp(1)}, {0, 0, 0})});
  Expr c = convert_mt_atoms(e);
  Expr want;
  want.add_term(6, {Z({2, 1})});
  want.add_term(1, {even_zeta(2), mt({iexp(1), zexp(), iexp(1)}, {0, 0, 0})});
  EXPECT_EQ(c, want);
}
