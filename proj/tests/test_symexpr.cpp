#include "mtz/errors.hpp"
#include "mtz/symexpr.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mtz;

namespace {

// Random small expression; at most one z-bearing atom when `allow_z`.
Expr random_expr(std::mt19937& rng, bool allow_z) {
  Expr e;
  int nterms = 1 + static_cast<int>(rng() % 3);
  const Rational colors[] = {0, Rational(1, 2), Rational(1, 3)};
  for (int t = 0; t < nterms; ++t) {
    std::vector<Atom> atoms;
    int natoms = static_cast<int>(rng() % 3);
    for (int a = 0; a < natoms; ++a) {
      switch (rng() % 4) {
        case 0: atoms.push_back(even_zeta(2 * static_cast<long>(rng() % 4))); break;
        case 1: atoms.push_back(tilde_zeta(static_cast<long>(rng() % 6))); break;
        case 2: atoms.push_back(lerch(iexp(2 + rng() % 3), colors[rng() % 3])); break;
        default:
          atoms.push_back(mt({iexp(1 + rng() % 2), iexp(1 + rng() % 2), iexp(1 + rng() % 3)},
                             {colors[rng() % 3], 0, colors[rng() % 3]}));
      }
    }
    if (allow_z && rng() % 2) atoms.push_back(lerch(zexp(static_cast<long>(rng() % 3)), colors[rng() % 3]));
    e.add_term(Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4)), atoms);
  }
  return e;
}

}  // namespace

TEST(Symexpr, TildeOddVanishes) {
  Expr e;
  e.add_term(3, {tilde_zeta(5), even_zeta(2)});
  EXPECT_TRUE(e.is_zero());
  Expr f(tilde_zeta(4));
  EXPECT_EQ(f, Expr(even_zeta(4)));
}

TEST(Symexpr, MergeAndOrder) {
  Atom x = lerch(zexp(2), Rational(1, 3));
  Atom y = even_zeta(2);
  Expr e;
  e.add_term(2, {x});
  e.add_term(3, {x});
  EXPECT_EQ(e, Expr(x, 5));
  Expr ab, ba;
  ab.add_term(1, {x, y});
  ba.add_term(1, {y, x});
  EXPECT_EQ(ab, ba);
}

TEST(Symexpr, Canonicalization) {
  // depth-1 MT is a Lerch value; summed slots commute with their colors
  EXPECT_EQ(Expr(mt({zexp(), iexp(2)}, {Rational(1, 3), 0})), Expr(lerch(zexp(2), Rational(1, 3))));
  EXPECT_EQ(Expr(mt({iexp(2), iexp(1), iexp(3)}, {0, Rational(1, 2), 0})),
            Expr(mt({iexp(1), iexp(2), iexp(3)}, {Rational(1, 2), 0, 0})));
  EXPECT_EQ(Expr(lerch(iexp(4), 0)), Expr(even_zeta(4)));
  EXPECT_EQ(Expr(lerch(iexp(4), Rational(4, 3))), Expr(lerch(iexp(4), Rational(1, 3))));
  EXPECT_THROW(Expr(mt({zexp(), zexp(), iexp(1)}, {0, 0, 0})), std::logic_error);
}

TEST(Symexpr, Arithmetic) {
  Atom x = even_zeta(2), y = lerch(iexp(3), Rational(1, 2)), z = lerch(zexp(1), 0);
  Expr X(x), Y(y), Z(z);
  EXPECT_TRUE(multiply(X, Expr()).is_zero());
  EXPECT_EQ(scale(Rational(1, 2), scale(2, X)), X);
  EXPECT_EQ((X + Y) * Z, X * Z + Y * Z);
  EXPECT_THROW(Z * Z, std::logic_error);
}

TEST(Symexpr, RingLawsRandomized) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Expr a = random_expr(rng, false), b = random_expr(rng, false), c = random_expr(rng, true);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(normalize(normalize(c)), normalize(c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Symexpr, JsonRoundTrip) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    Expr a = random_expr(rng, true);
    auto j = to_json(a);
    EXPECT_EQ(expr_from_json(j), a);
    EXPECT_EQ(to_json(expr_from_json(j)).dump(), j.dump());
  }
  auto atom = atom_from_json(nlohmann::json::parse(R"({"kind":"mt","exps":["1","z+2"],"colors":["0","1/3"]})"));
  EXPECT_EQ(Expr(atom), Expr(lerch(zexp(3), Rational(1, 3))));
}

TEST(Symexpr, AffineParse) {
  EXPECT_EQ(AffineExp::parse("z+2"), zexp(2));
  EXPECT_EQ(AffineExp::parse("z"), zexp(0));
  EXPECT_EQ(AffineExp::parse("z-1"), zexp(-1));
  EXPECT_EQ(AffineExp::parse("7"), iexp(7));
  EXPECT_THROW(AffineExp::parse("2z"), std::invalid_argument);
}

TEST(Substitute, Examples) {
  auto n = substitute_z(Expr(lerch(zexp(2), 0)), {2, 0});
  ASSERT_EQ(n.terms.size(), 1u);
  auto& atom = n.terms.begin()->first.at(0);
  EXPECT_EQ(atom.kind, NumKind::EvenZeta);
  EXPECT_EQ(atom.arg, 4);

  auto m = substitute_z(Expr(mt({iexp(1), iexp(1), zexp()}, {0, 0, Rational(1, 3)})), {2, 0});
  auto& ma = m.terms.begin()->first.at(0);
  EXPECT_EQ(ma.kind, NumKind::MT);
  EXPECT_EQ(ma.exps, (std::vector<std::complex<double>>{1, 1, 2}));
  EXPECT_EQ(ma.colors, (std::vector<Rational>{0, 0, Rational(1, 3)}));

  auto odd = substitute_z(Expr(lerch(zexp(1), 0)), {2, 0});
  EXPECT_EQ(odd.terms.begin()->first.at(0).kind, NumKind::Zeta);

  EXPECT_THROW(substitute_z(Expr(lerch(zexp(), 0)), {0.5, 0}), DomainError);
}

TEST(Substitute, RingMap) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Expr a = random_expr(rng, false), b = random_expr(rng, true);
    for (std::complex<double> z0 : {std::complex<double>(2, 0), {1.5, 0}, {1, 2}}) {
      EXPECT_EQ(substitute_z(a * b, z0), multiply(substitute_z(a, z0), substitute_z(b, z0)));
    }
  }
}
