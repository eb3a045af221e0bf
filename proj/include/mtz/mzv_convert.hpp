#pragma once

// Colored Mordell-Tornheim values with integer exponents rewritten as
// rational combinations of colored multiple zeta values of the same weight
// and depth.

#include "mtz/symexpr.hpp"

#include <functional>
#include <vector>

namespace mtz {

/// Sum over j of f(x with x_j moved to the end).
Expr per_sum(const std::vector<long>& x, const std::function<Expr(const std::vector<long>&)>& f);

/// Absolute convergence of sum over m of prod m_j^{-s_j} (m_1+...+m_k)^{-s}:
/// with the s_j sorted ascending, s + s_1 + ... + s_r > r for every r.
bool mt_converges(std::vector<double> summed, double last);

/// zeta_MT(a, b; c) with trivial colors.
Expr mt_to_mzv_depth2(long a, long b, long c);

/// zeta_MT(a, b, c; d) with trivial colors.
Expr mt_to_mzv_depth3(long a, long b, long c, long d);

/// One term of 1/(x^a y^b) = sum coeff / (kept^kept_exp (x+y)^union_exp),
/// where kept is x when keep_first is set and y otherwise.
struct PfTerm {
  bool keep_first;
  long kept_exp;
  long union_exp;
  Integer coeff;
};
std::vector<PfTerm> pf_split(long a, long b);

/// exps = (s_1, ..., s_k, s_{k+1}) with colors on the same slots. Every atom
/// of the result is an MZV of depth k (an MZV of depth 1 when k = 1).
Expr mt_to_mzv_general(const std::vector<long>& exps, const std::vector<Rational>& colors);

/// Rewrites every z-free MT atom of e through mt_to_mzv_general.
Expr convert_mt_atoms(const Expr& e);

}  // namespace mtz
