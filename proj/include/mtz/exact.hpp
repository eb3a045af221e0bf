#pragma once

// Exact rational arithmetic: Bernoulli numbers and polynomials, binomial and
// multinomial coefficients, and the integral of a product of Bernoulli
// polynomials over [0, 1].

#include <boost/multiprecision/gmp.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mtz {

using Integer = boost::multiprecision::mpz_int;
/// Always kept in lowest terms with a positive denominator (GMP mpq).
using Rational = boost::multiprecision::mpq_rational;

/// B_n under the generating function t e^{xt}/(e^t - 1) at x = 0, so B_1 = -1/2.
/// Memoized; safe for concurrent callers.
Rational bernoulli(int n);

/// C(n, k), with C(n, k) = 0 whenever k < 0 or k > n. Throws std::invalid_argument
/// for n < 0: no call site needs generalized binomials.
Integer binomial(long n, long k);

Integer factorial(long n);

/// (sum parts)! / prod(parts!), defined as 0 when any part is negative.
Integer multinomial(std::span<const long> parts);

/// Coefficients of B_n(x) in ascending powers of x.
std::vector<Rational> bernoulli_poly(int n);

/// Evaluate a polynomial given by ascending coefficients.
Rational poly_eval(std::span<const Rational> coeffs, const Rational& x);

/// C_s = integral over [0,1] of prod_j B_{s_j}(x), via the closed double sum
/// sum_r prod_j C(s_j, r_j) B_{s_j - r_j} / (|r| + 1).
Rational c_const(std::span<const int> s);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Reduces q into [0, 1).
Rational frac_part(const Rational& q);

}  // namespace mtz
