#pragma once

// Signed cyclic sums of colored Mordell-Tornheim values and their reduction
// to lower-depth values, plus the finite-N integral check behind it.

#include "mtz/symexpr.hpp"

#include <complex>
#include <vector>

namespace mtz {

struct LhsTerm {
  Rational sign;
  Atom atom;
};

struct Identity {
  std::vector<LhsTerm> lhs;
  Expr rhs;
  std::vector<int> s;
  Rational alpha = 0;
  int k = 0;

  Expr lhs_expr() const;
};

nlohmann::json to_json(const Identity& id);
Identity identity_from_json(const nlohmann::json& j);

/// ζ_MT(s_j for j outside i and j <= k, z, n) with color alpha on the z slot.
Atom f_atom(const std::vector<int>& s, const std::vector<int>& i, const Rational& alpha, long n);

/// E(s, i, alpha). `i` holds 0-based positions into s, strictly increasing.
Expr e_expr(const std::vector<int>& s, const std::vector<int>& i, const Rational& alpha);

Identity theorem_identity(const std::vector<int>& s, const Rational& alpha);

Identity cor_depth2(int a, int b, const Rational& alpha);

Expr e2(int n, const Rational& alpha);
Expr e3(int n, const Rational& alpha);
Expr e4(int n, const Rational& alpha);
Identity cor_specialn(int n, const Rational& alpha);
Identity cor_special1(const Rational& alpha);

struct ExprPair {
  Expr lhs;
  Expr rhs;
};
/// Strongly reduced form at z = n, alpha = 0: lhs over MT atoms, rhs over MZVs.
ExprPair cor_further(int n);

struct FiniteNResult {
  std::complex<double> lhs;
  std::complex<double> rhs;
};

/// Both sides of the truncated integral identity for index set i (0-based).
FiniteNResult finite_n_oracle(const std::vector<int>& s, const std::vector<int>& i,
                              const Rational& alpha, std::complex<double> z0, int N);

/// Same computation with every kernel run serially.
FiniteNResult finite_n_oracle_serial(const std::vector<int>& s, const std::vector<int>& i,
                                     const Rational& alpha, std::complex<double> z0, int N);

}  // namespace mtz
