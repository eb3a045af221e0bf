#include "mtz/real.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace mtz {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

namespace {

void widen(Real& a, const Real& b) {
  if (b.prec() > a.prec()) mpfr_prec_round(a.get(), b.prec(), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }

#define MTZ_UNARY(name, fn)               \
  Real name(const Real& x) {              \
    Real r(x.prec());                     \
    fn(r.get(), x.get(), MPFR_RNDN);      \
    return r;                             \
  }
MTZ_UNARY(abs, mpfr_abs)
MTZ_UNARY(sqrt, mpfr_sqrt)
MTZ_UNARY(exp, mpfr_exp)
MTZ_UNARY(log, mpfr_log)
MTZ_UNARY(cos, mpfr_cos)
MTZ_UNARY(sin, mpfr_sin)
#undef MTZ_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.prec(), y.prec()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow_ui(const Real& x, unsigned long n) {
  Real r(x.prec());
  mpfr_pow_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pi(mpfr_prec_t prec) {
  static std::mutex mu;
  static std::map<mpfr_prec_t, std::unique_ptr<Real>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[prec];
  if (!slot) {
    slot = std::make_unique<Real>(prec);
    mpfr_const_pi(slot->get(), MPFR_RNDN);
  }
  return *slot;
}

double unit_roundoff(mpfr_prec_t prec) { return std::ldexp(1.0, 1 - static_cast<int>(prec)); }

double Complex::abs_bound() const {
  Real m = sqrt(re * re + im * im);
  return m.to_double() * (1 + 1e-15);
}

std::string Complex::str(int digits) const {
  if (is_real()) return re.str(digits);
  return re.str(digits) + (mpfr_signbit(im.get()) ? " - " : " + ") + abs(im).str(digits) + "i";
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  if (o.is_real()) return *this *= o.re;
  if (is_real()) {
    Real r = re;
    re = r * o.re;
    im = r * o.im;
    return *this;
  }
  Real a = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(a);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re *= o;
  if (!im.is_zero()) im *= o;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator*(Complex a, const Real& b) { return a *= b; }

Complex root_of_unity(const Rational& theta, mpfr_prec_t prec) {
  Rational t = frac_part(theta);
  if (t == 0) return {Real(1.0, prec), Real(prec)};
  if (t == Rational(1, 2)) return {Real(-1.0, prec), Real(prec)};
  if (t == Rational(1, 4)) return {Real(prec), Real(1.0, prec)};
  if (t == Rational(3, 4)) return {Real(prec), Real(-1.0, prec)};
  Real ang = pi(prec) * Real(2 * t, prec);
  return {cos(ang), sin(ang)};
}

Complex inv_power(const Real& t, const Complex& s) {
  Real L = log(t);
  Real mag = exp(-(s.re * L));
  if (s.im.is_zero()) return {mag, Real(t.prec())};
  Real ang = -(s.im * L);
  return {mag * cos(ang), mag * sin(ang)};
}

}  // namespace mtz
