#include "mtz/errors.hpp"
#include "mtz/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace mtz {

namespace {

// Johansson's bound: 4 |(s)_{2M}| / (2 pi)^{2M} * (a+N)^{-(sigma+2M-1)} / (sigma+2M-1).
// lpoch[M] holds log |(s)_{2M}|.
double log_remainder(const std::vector<double>& lpoch, double sigma, double aN, long M) {
  double e = sigma + 2 * M - 1;
  if (e <= 0) return std::numeric_limits<double>::infinity();
  return std::log(4.0) + lpoch[M] - 2 * M * std::log(2 * std::numbers::pi) - e * std::log(aN) - std::log(e);
}

}  // namespace

EvenZetaExact even_zeta_exact(long two_r) {
  if (two_r < 0 || two_r % 2) throw DomainError("even_zeta_exact: argument must be even and non-negative");
  if (two_r == 0) return {Rational(-1, 2), 0};
  // zeta(2r) = (2 pi)^{2r} |B_{2r}| / (2 (2r)!)
  Rational b = bernoulli(static_cast<int>(two_r));
  if (b < 0) b = -b;
  Rational c = b * Rational(Integer(1) << two_r) / Rational(2 * factorial(two_r));
  return {c, two_r};
}

EvalResult even_zeta_value(long two_r, const EvalConfig& cfg) {
  auto ex = even_zeta_exact(two_r);
  mpfr_prec_t p = cfg.precision_bits;
  Real v(ex.coeff, p);
  double bound = 0;
  if (ex.pi_power) {
    v *= pow_ui(pi(p), ex.pi_power);
    bound = std::abs(v.to_double()) * (ex.pi_power + 4) * unit_roundoff(p);
  }
  return {{v, Real(p)}, bound, "exact"};
}

EvalResult hurwitz_zeta(const Complex& s, const Rational& a, const EvalConfig& cfg, bool continued) {
  if (a <= 0 || a > 1) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  mpfr_prec_t p = cfg.precision_bits;
  double sigma = s.re.to_double(), t = s.im.to_double();
  if (s.im.is_zero() && mpfr_cmp_ui(s.re.get(), 1) == 0) throw DomainError("hurwitz_zeta: pole at s = 1");
  if (!continued && !(sigma > 1)) throw DomainError("hurwitz_zeta: needs Re(s) > 1");
  double ad = a.convert_to<double>();
  double log_tol = std::log(cfg.target_tol);

  long Mmax = 4 * p;
  std::vector<double> lpoch(Mmax + 1, 0.0);
  for (long m = 1; m <= Mmax; ++m) {
    double x0 = sigma + 2 * m - 2, x1 = sigma + 2 * m - 1;
    lpoch[m] = lpoch[m - 1] + 0.5 * std::log(x0 * x0 + t * t) + 0.5 * std::log(x1 * x1 + t * t);
  }
  long N = 8, M = 1;
  double best = std::numeric_limits<double>::infinity();
  long cap = std::max<long>(8, cfg.max_terms);
  for (long n = 8;; n *= 2) {
    n = std::min(n, cap);
    long bestM = 1;
    double bm = std::numeric_limits<double>::infinity();
    for (long m = 1; m <= Mmax; ++m) {
      double r = log_remainder(lpoch, sigma, ad + n, m);
      if (r < bm) {
        bm = r;
        bestM = m;
      } else if (r > bm + 50) {
        break;
      }
    }
    if (bm < best) {
      best = bm;
      N = n;
      M = bestM;
    }
    if (best <= log_tol || n >= cap) break;
  }

  Complex sum(p);
  double abs_sum = 0;
  for (long k = 0; k < N; ++k) {
    Complex term = inv_power(Real(a + k, p), s);
    abs_sum += term.abs_bound();
    sum += term;
  }
  Real aN(a + N, p);
  Complex tail = inv_power(aN, s);  // (a+N)^{-s}
  // (a+N)^{1-s} / (s - 1)
  {
    Complex num = tail * aN;
    Complex den{s.re - Real(1.0, p), s.im};
    Real d2 = den.re * den.re + den.im * den.im;
    Complex q{(num.re * den.re + num.im * den.im) / d2, (num.im * den.re - num.re * den.im) / d2};
    abs_sum += q.abs_bound();
    sum += q;
  }
  {
    Complex half = tail * Real(0.5, p);
    abs_sum += half.abs_bound();
    sum += half;
  }
  // Bernoulli terms: B_{2j}/(2j)! (s)_{2j-1} (a+N)^{-s-2j+1}
  Complex poch = s;  // (s)_1
  Real inv_aN = Real(1.0, p) / aN;
  Real inv_aN2 = inv_aN * inv_aN;
  Complex power = tail * inv_aN;  // (a+N)^{-s-1}
  for (long j = 1; j <= M; ++j) {
    Real c(bernoulli(static_cast<int>(2 * j)) / Rational(factorial(2 * j)), p);
    Complex term = poch * power * c;
    abs_sum += term.abs_bound();
    sum += term;
    // advance (s)_{2j-1} -> (s)_{2j+1}, power -> (a+N)^{-s-2j-1}
    Complex f1{s.re + Real(static_cast<double>(2 * j - 1), p), s.im};
    Complex f2{s.re + Real(static_cast<double>(2 * j), p), s.im};
    poch *= f1;
    poch *= f2;
    power *= inv_aN2;
  }
  double mag = std::sqrt(sigma * sigma + t * t);
  double ops = static_cast<double>(N + 4 * M + 32) + 8 * mag * (1 + std::log(ad + N));
  double roundoff = ops * unit_roundoff(p) * abs_sum;
  return {sum, std::exp(best) + roundoff, "hurwitz"};
}

EvalResult lerch_phi(const Complex& s, const Rational& alpha, const EvalConfig& cfg, bool conditional) {
  Rational al = frac_part(alpha);
  mpfr_prec_t p = cfg.precision_bits;
  double sigma = s.re.to_double();
  if (al == 0) {
    auto r = hurwitz_zeta(s, 1, cfg);
    r.route = "hurwitz";
    return r;
  }
  if (!(sigma > 1)) {
    if (!conditional || !(sigma > 0)) throw DomainError("lerch_phi: needs Re(s) > 1 (or the conditional opt-in)");
    if (s.im.is_zero() && mpfr_cmp_ui(s.re.get(), 1) == 0) {
      // -log(1 - e(alpha))
      Complex w = root_of_unity(al, p);
      Real x = Real(1.0, p) - w.re, y = -w.im;
      Real modulus = sqrt(x * x + y * y);
      Complex v{-log(modulus), -atan2(y, x)};
      return {v, 16 * unit_roundoff(p) * (v.abs_bound() + 1), "closed"};
    }
  }
  Integer q = denominator(al), num = numerator(al);
  long qq = q.convert_to<long>();
  Complex acc(p);
  double bound = 0, abs_acc = 0;
  for (long a = 1; a <= qq; ++a) {
    EvalResult h = hurwitz_zeta(s, Rational(a, qq), cfg, conditional);
    Complex w = root_of_unity(Rational(num * a, q), p);
    acc += h.value * w;
    bound += h.bound + h.value.abs_bound() * 4 * unit_roundoff(p);
    abs_acc += h.value.abs_bound();
  }
  Complex scale = inv_power(Real(static_cast<double>(qq), p), s);
  double sc = scale.abs_bound() * (1 + 1e-12);
  Complex v = acc * scale;
  bound = (bound + abs_acc * 8 * unit_roundoff(p) * (qq + std::log(double(qq)) * std::abs(sigma))) * sc;
  return {v, bound, "hurwitz"};
}

}  // namespace mtz
