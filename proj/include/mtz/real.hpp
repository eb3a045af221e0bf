#pragma once

// Thin value types over MPFR. Each Real carries its own precision; binary
// operations produce the larger precision of the operands.

#include "mtz/exact.hpp"

#include <mpfr.h>

#include <string>

namespace mtz {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 256);
  Real(double v, mpfr_prec_t prec);
  Real(const Rational& q, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  std::string str(int digits = 30) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

 private:
  mpfr_t v_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow_ui(const Real& x, unsigned long n);

/// Cached per precision; safe for concurrent callers.
Real pi(mpfr_prec_t prec);

/// 2^(1 - prec): a bound on the relative error of one correctly rounded op.
double unit_roundoff(mpfr_prec_t prec);

struct Complex {
  Real re, im;

  explicit Complex(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t prec() const { return re.prec(); }
  bool is_real() const { return im.is_zero(); }
  /// Upper bound for |z| as a double.
  double abs_bound() const;
  std::string str(int digits = 30) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator*(Complex a, const Real& b);

/// e(theta) = exp(2 pi i theta) for a rational angle.
Complex root_of_unity(const Rational& theta, mpfr_prec_t prec);

/// t^(-s) for real t > 0 and complex s.
Complex inv_power(const Real& t, const Complex& s);

}  // namespace mtz
