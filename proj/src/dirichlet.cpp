#include "mtz/dirichlet.hpp"

#include "mtz/errors.hpp"
#include "mtz/kernels.hpp"

#include <omp.h>

#include <exception>
#include <map>
#include <numeric>
#include <string>

namespace mtz {

namespace {

long order_mod(long g, long q) {
  long x = g % q, n = 1;
  while (x != 1 % q) {
    x = x * g % q;
    ++n;
  }
  return n;
}

long phi(long n) {
  long r = 0;
  for (long a = 1; a <= n; ++a) r += std::gcd(a, n) == 1;
  return r;
}

// x = g mod q, x = 1 mod f/q
long lift(long g, long q, long f) {
  long r = f / q;
  for (long x = 0; x < f; ++x)
    if (x % q == ((g % q) + q) % q && x % r == 1 % r) return x;
  throw std::logic_error("lift: no CRT solution");
}

void check_modulus(long f) {
  if (f < 1 || f > 50) throw DomainError("characters: modulus must lie in 1..50, got " + std::to_string(f));
}

Complex reciprocal(const Complex& z) {
  Real d = z.re * z.re + z.im * z.im;
  return {z.re / d, -(z.im / d)};
}

struct Tables {
  UnitGenerators gen;
  std::map<long, std::vector<long>> logs;  // unit -> exponent tuple
};

Tables tables(long f) {
  Tables t;
  t.gen = unit_generators(f);
  std::size_t r = t.gen.gens.size();
  std::vector<long> digits(r, 0);
  while (true) {
    long x = 1 % f;
    for (std::size_t i = 0; i < r; ++i)
      for (long e = 0; e < digits[i]; ++e) x = x * t.gen.gens[i] % f;
    t.logs.emplace(x, digits);
    std::size_t i = 0;
    while (i < r && ++digits[i] == t.gen.orders[i]) digits[i++] = 0;
    if (i == r) break;
  }
  return t;
}

DirichletCharacter build(long f, long index, const Tables& t) {
  DirichletCharacter chi;
  chi.modulus = f;
  chi.index = index;
  chi.values.assign(f, std::nullopt);
  std::vector<long> digits;
  long rest = index;
  for (long o : t.gen.orders) {
    digits.push_back(rest % o);
    rest /= o;
  }
  for (auto& [a, lg] : t.logs) {
    Rational ang = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) ang += Rational(digits[i] * lg[i], t.gen.orders[i]);
    chi.values[a] = frac_part(ang);
  }
  for (long d = 1; d <= f; ++d) {
    if (f % d) continue;
    bool trivial = true;
    for (auto& [a, lg] : t.logs)
      if (a % d == 1 % d && *chi.values[a] != 0) trivial = false;
    if (trivial) {
      chi.conductor = d;
      break;
    }
  }
  chi.primitive = chi.conductor == f;
  return chi;
}

}  // namespace

const Rational& DirichletCharacter::angle(long a) const {
  const auto& v = values[mod(a)];
  if (!v) throw std::logic_error("character vanishes at " + std::to_string(a));
  return *v;
}

DirichletCharacter DirichletCharacter::conj() const {
  DirichletCharacter c = *this;
  for (auto& v : c.values)
    if (v) v = frac_part(-*v);
  // the conjugate has the index of the negated digits
  UnitGenerators g = unit_generators(modulus);
  long rest = index, out = 0, place = 1;
  for (long o : g.orders) {
    long d = rest % o;
    rest /= o;
    out += ((o - d) % o) * place;
    place *= o;
  }
  c.index = out;
  return c;
}

bool DirichletCharacter::principal() const {
  for (auto& v : values)
    if (v && *v != 0) return false;
  return true;
}

UnitGenerators unit_generators(long f) {
  check_modulus(f);
  UnitGenerators out;
  long n = f;
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    long q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (p == 2) {
      if (q >= 4) {
        out.gens.push_back(lift(q - 1, q, f));
        out.orders.push_back(2);
      }
      if (q >= 8) {
        out.gens.push_back(lift(5, q, f));
        out.orders.push_back(q / 4);
      }
      continue;
    }
    long ph = q / p * (p - 1);
    long g = 2;
    while (std::gcd(g, q) != 1 || order_mod(g, q) != ph) ++g;
    out.gens.push_back(lift(g, q, f));
    out.orders.push_back(ph);
  }
  return out;
}

std::vector<DirichletCharacter> enumerate_characters(long f) {
  check_modulus(f);
  Tables t = tables(f);
  long count = phi(f);
  std::vector<DirichletCharacter> out;
  for (long i = 0; i < count; ++i) out.push_back(build(f, i, t));
  return out;
}

DirichletCharacter character(long f, long index) {
  check_modulus(f);
  if (index < 0 || index >= phi(f))
    throw DomainError("character index " + std::to_string(index) + " out of range mod " + std::to_string(f));
  return build(f, index, tables(f));
}

EvalResult gauss_sum(const DirichletCharacter& chi, const EvalConfig& cfg) {
  mpfr_prec_t p = cfg.precision_bits;
  long f = chi.modulus;
  Complex acc(p);
  for (long n = 1; n <= f; ++n) {
    if (chi.vanishes(n)) continue;
    acc += root_of_unity(chi.angle(n) + Rational(n, f), p);
  }
  return {acc, (8.0 * f + 8) * unit_roundoff(p), "exact"};
}

EvalResult l_mt_assemble(const std::vector<long>& exps, const std::vector<DirichletCharacter>& chis,
                         const EvalConfig& cfg, long budget) {
  if (exps.size() < 2 || exps.size() != chis.size())
    throw std::invalid_argument("l_mt_assemble: need k + 1 exponents and k + 1 characters");
  mpfr_prec_t p = cfg.precision_bits;
  long grid = 1;
  for (auto& c : chis) {
    if (!c.primitive)
      throw DomainError("l_mt_assemble: character " + std::to_string(c.index) + " mod " +
                        std::to_string(c.modulus) + " is not primitive");
    grid *= c.modulus;
    if (grid > budget) throw BudgetExceeded("l_mt_assemble: character grid exceeds budget");
  }

  std::size_t k1 = chis.size();
  std::vector<Complex> inv_tau;
  double tau_rel = 0;
  for (auto& c : chis) {
    EvalResult t = gauss_sum(c.conj(), cfg);
    double mag = std::sqrt(static_cast<double>(c.modulus));
    tau_rel += 2 * t.bound / (mag - t.bound);
    inv_tau.push_back(reciprocal(t.value));
  }

  // every tuple (j_1, ..., j_{k+1}) with all chi_i(j_i) != 0
  std::vector<std::vector<long>> tuples{{}};
  for (auto& c : chis) {
    std::vector<std::vector<long>> next;
    for (auto& t : tuples)
      for (long j = 1; j <= c.modulus; ++j) {
        if (c.vanishes(j)) continue;
        next.push_back(t);
        next.back().push_back(j);
      }
    tuples = std::move(next);
  }

  std::vector<EvalResult> vals(tuples.size(), EvalResult{Complex(p), 0, ""});
  std::vector<std::exception_ptr> errs(tuples.size());
  std::vector<PolylogCache> caches(std::max(1, kernels::thread_count()));
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_count())
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    try {
      std::vector<AffineExp> e;
      std::vector<Rational> col;
      for (std::size_t i = 0; i < k1; ++i) {
        e.push_back(iexp(exps[i]));
        col.push_back(Rational(tuples[t][i], chis[i].modulus));
      }
      Atom a = *canonical(mt(e, col));
      vals[t] = atom_eval(substitute_z(a, 1.0), cfg, &caches[omp_get_thread_num() % caches.size()]);
    } catch (...) {
      errs[t] = std::current_exception();
    }
  }
  for (auto& ep : errs)
    if (ep) std::rethrow_exception(ep);

  Complex scale_all{Real(1.0, p), Real(p)};
  for (auto& it : inv_tau) scale_all *= it;
  double wmag = scale_all.abs_bound();
  Complex total(p);
  double bound = 0, abs_total = 0;
  std::string route;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    Rational ang = 0;
    for (std::size_t i = 0; i < k1; ++i) ang -= chis[i].angle(tuples[t][i]);
    total += vals[t].value * root_of_unity(frac_part(ang), p);
    bound += wmag * vals[t].bound;
    abs_total += vals[t].value.abs_bound();
    if (route.find(vals[t].route) == std::string::npos) route += (route.empty() ? "" : "+") + vals[t].route;
  }
  total *= scale_all;
  bound += wmag * abs_total * (tau_rel + (8.0 * k1 + 16) * unit_roundoff(p));
  return {total, bound * (1 + 1e-9), route.empty() ? "exact" : route};
}

std::vector<WeightedIdentity> character_theorem_identity(const std::vector<int>& s, const DirichletCharacter& chi,
                                                         const EvalConfig& cfg) {
  if (!chi.primitive) throw DomainError("character_theorem_identity: character is not primitive");
  if (s.size() < 2) throw DomainError("character_theorem_identity: needs k >= 2");
  mpfr_prec_t p = cfg.precision_bits;
  Complex inv = reciprocal(gauss_sum(chi.conj(), cfg).value);
  std::vector<WeightedIdentity> out;
  long f = chi.modulus;
  for (long n = 1; n <= f; ++n) {
    if (chi.vanishes(n)) continue;
    Complex w = root_of_unity(frac_part(-chi.angle(n)), p) * inv;
    out.push_back({n, std::move(w), theorem_identity(s, Rational(n, f))});
  }
  return out;
}

WeightedResidual weighted_residual(const std::vector<WeightedIdentity>& family, std::complex<double> z0,
                                   const EvalConfig& cfg) {
  mpfr_prec_t p = cfg.precision_bits;
  WeightedResidual out{Complex(p), 0, 0};
  double abs_total = 0;
  for (auto& wi : family) {
    EvalResult l = expr_eval(wi.identity.lhs_expr(), z0, cfg);
    EvalResult r = expr_eval(wi.identity.rhs, z0, cfg);
    double wm = wi.weight.abs_bound();
    out.residual += wi.weight * (l.value - r.value);
    out.bound += wm * (l.bound + r.bound) * (1 + 1e-9);
    out.max_atom_bound = std::max({out.max_atom_bound, l.bound, r.bound});
    abs_total += wm * (l.value.abs_bound() + r.value.abs_bound());
  }
  out.bound += 16 * unit_roundoff(p) * abs_total;
  return out;
}

}  // namespace mtz
