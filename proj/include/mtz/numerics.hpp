#pragma once

// Multiprecision evaluation with error bounds: even zeta values, Hurwitz
// zeta, periodic zeta, colored MZVs, colored MT values and whole Exprs.
// Every result carries `bound`, a majorant of |value - true value|.

#include "mtz/real.hpp"
#include "mtz/symexpr.hpp"

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mtz {

struct EvalConfig {
  long precision_bits = 256;
  double target_tol = 1e-40;
  long max_terms = 2'000'000;
  int direct_n = 3000;  // truncation for the double-precision direct MT route
};

struct EvalResult {
  Complex value;
  double bound = 0;
  std::string route;
};

/// zeta(2r) = coeff * pi^(2r); zeta(0) = -1/2.
struct EvenZetaExact {
  Rational coeff;
  long pi_power;
};
EvenZetaExact even_zeta_exact(long two_r);
EvalResult even_zeta_value(long two_r, const EvalConfig& cfg);

/// Euler-Maclaurin with an explicit remainder bound. Needs Re(s) > 1 unless
/// `continued` is set (then any s != 1 with the same formula).
EvalResult hurwitz_zeta(const Complex& s, const Rational& a, const EvalConfig& cfg, bool continued = false);

/// phi(s, alpha) = sum_{m >= 1} e(m alpha) m^-s. With `conditional`, also
/// 0 < Re(s) <= 1 for alpha not an integer.
EvalResult lerch_phi(const Complex& s, const Rational& alpha, const EvalConfig& cfg, bool conditional = false);

/// Shared state for repeated multiple polylogarithm evaluations.
class PolylogCache {
 public:
  struct Entry {
    Complex value;
    double bound;
  };
  std::map<std::pair<std::vector<std::pair<int, Rational>>, Rational>, Entry> table;
};

/// Colored MZV sum_{n_1 > ... > n_k} prod e(c_i n_i) n_i^-s_i through the
/// Hoelder convolution of iterated integrals.
EvalResult mzv_eval(const std::vector<long>& exps, const std::vector<Rational>& colors, const EvalConfig& cfg,
                    PolylogCache* cache = nullptr);

/// Reference: nested prefix sums over n_1 <= N in double precision with an
/// integral-comparison tail. Requires s_1 >= 2.
struct DoubleEval {
  std::complex<double> value;
  double bound;
};
DoubleEval mzv_eval_dp(const std::vector<long>& exps, const std::vector<Rational>& colors, int N);

/// Direct colored MT summation, depth <= 3, in double precision.
EvalResult mtzv_eval_direct(const std::vector<std::complex<double>>& exps, const std::vector<Rational>& colors,
                            int N, const EvalConfig& cfg);

EvalResult atom_eval(const NumAtom& a, const EvalConfig& cfg, PolylogCache* cache = nullptr);
EvalResult numexpr_eval(const NumExpr& e, const EvalConfig& cfg);
/// Substitutes z = z0 (Re z0 >= 1) and evaluates.
EvalResult expr_eval(const Expr& e, std::complex<double> z0, const EvalConfig& cfg);

/// |a - b| <= a.bound + b.bound, checked in working precision.
bool agree(const EvalResult& a, const EvalResult& b, double slack = 0);
double distance(const EvalResult& a, const EvalResult& b);

}  // namespace mtz
