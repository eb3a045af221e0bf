#include "mtz/errors.hpp"
#include "mtz/kernels.hpp"
#include "mtz/mzv_convert.hpp"
#include "mtz/numerics.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <limits>
#include <set>

namespace mtz {

namespace {

Complex to_complex(std::complex<double> v, mpfr_prec_t p) { return {Real(v.real(), p), Real(v.imag(), p)}; }

std::vector<long> integer_exps(const NumAtom& a) {
  std::vector<long> out;
  for (auto& e : a.exps) out.push_back(std::lround(e.real()));
  return out;
}

EvalResult conversion_route(const NumAtom& a, const EvalConfig& cfg, PolylogCache* cache) {
  Expr mz = mt_to_mzv_general(integer_exps(a), a.colors);
  mpfr_prec_t p = cfg.precision_bits;
  Complex acc(p);
  double bound = 0, abs_acc = 0;
  for (auto& [key, c] : mz.terms()) {
    const Atom& z = key.at(0);
    std::vector<long> e;
    for (auto& x : z.exps) e.push_back(x.a);
    EvalResult r = mzv_eval(e, z.colors, cfg, cache);
    Real cr(c, p);
    double ac = std::abs(c.convert_to<double>()) * (1 + 1e-12);
    acc += r.value * cr;
    bound += ac * r.bound;
    abs_acc += ac * r.value.abs_bound();
  }
  bound += (mz.size() + 4.0) * unit_roundoff(p) * abs_acc;
  return {acc, bound, "conversion"};
}

std::string join_routes(const std::set<std::string>& routes) {
  std::string out;
  for (auto& r : routes) out += (out.empty() ? "" : "+") + r;
  return out.empty() ? "exact" : out;
}

}  // namespace

EvalResult mtzv_eval_direct(const std::vector<std::complex<double>>& exps, const std::vector<Rational>& colors,
                            int N, const EvalConfig& cfg) {
  std::vector<double> c;
  for (auto& x : colors) c.push_back(frac_part(x).convert_to<double>());
  std::vector<double> summed;
  for (std::size_t i = 0; i + 1 < exps.size(); ++i) summed.push_back(exps[i].real());
  if (exps.size() < 2 || !mt_converges(summed, exps.back().real()))
    throw DomainError("mtzv_eval_direct: outside the absolute convergence domain");
  auto r = kernels::mt_direct(exps, c, N);
  return {to_complex(r.value, cfg.precision_bits), r.bound, "direct"};
}

EvalResult atom_eval(const NumAtom& a, const EvalConfig& cfg, PolylogCache* cache) {
  mpfr_prec_t p = cfg.precision_bits;
  switch (a.kind) {
    case NumKind::EvenZeta:
      return even_zeta_value(a.arg, cfg);
    case NumKind::Zeta:
      if (a.arg < 2) throw DomainError("zeta(1) diverges");
      return mzv_eval({a.arg}, {0}, cfg, cache);
    case NumKind::Lerch: {
      if (a.integral() && a.exps[0].real() >= 1) return mzv_eval(integer_exps(a), a.colors, cfg, cache);
      return lerch_phi(to_complex(a.exps[0], p), a.colors[0], cfg);
    }
    case NumKind::MZV:
      if (!a.integral()) throw DomainError("MZV with non-integer exponents");
      return mzv_eval(integer_exps(a), a.colors, cfg, cache);
    case NumKind::MT: {
      bool positive = a.integral();
      for (auto& e : a.exps) positive = positive && e.real() >= 1;
      if (positive) {
        try {
          return conversion_route(a, cfg, cache);
        } catch (const DomainError&) {
          if (a.exps.size() > 4) throw;
        }
      }
      return mtzv_eval_direct(a.exps, a.colors, cfg.direct_n, cfg);
    }
  }
  throw std::logic_error("atom_eval: unknown kind");
}

EvalResult numexpr_eval(const NumExpr& e, const EvalConfig& cfg) {
  mpfr_prec_t p = cfg.precision_bits;
  std::vector<NumAtom> atoms;
  {
    std::set<NumAtom> seen;
    for (auto& [key, c] : e.terms)
      for (auto& a : key) seen.insert(a);
    atoms.assign(seen.begin(), seen.end());
  }
  std::vector<EvalResult> vals(atoms.size(), EvalResult{Complex(p), 0, ""});
  std::vector<std::exception_ptr> errs(atoms.size());
  std::vector<PolylogCache> caches(std::max(1, kernels::thread_count()));
#pragma omp parallel for schedule(dynamic) num_threads(kernels::thread_count())
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    try {
      vals[i] = atom_eval(atoms[i], cfg, &caches[omp_get_thread_num() % caches.size()]);
    } catch (const DomainError& ex) {
      errs[i] = std::make_exception_ptr(DomainError(to_string(atoms[i]) + ": " + ex.what()));
    } catch (...) {
      errs[i] = std::current_exception();
    }
  }
  for (auto& ep : errs)
    if (ep) std::rethrow_exception(ep);

  std::set<std::string> routes;
  for (auto& v : vals) routes.insert(v.route);
  auto index = [&](const NumAtom& a) {
    return static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin());
  };
  Complex total(p);
  double bound = 0, abs_total = 0;
  for (auto& [key, c] : e.terms) {
    Complex term{Real(c, p), Real(p)};
    // product rule: err' = m err + b (mag + err)
    double mag = 1, err = 0;
    for (auto& a : key) {
      const EvalResult& v = vals[index(a)];
      term *= v.value;
      double m = v.value.abs_bound();
      err = m * err + v.bound * (mag + err);
      mag *= m;
    }
    double ac = std::abs(c.convert_to<double>()) * (1 + 1e-12);
    bound += ac * err * (1 + 1e-12);
    abs_total += ac * mag;
    total += term;
  }
  std::size_t maxlen = 0;
  for (auto& [key, c] : e.terms) maxlen = std::max(maxlen, key.size());
  bound += (maxlen + 4.0) * unit_roundoff(p) * abs_total * (1 + e.terms.size() * 1e-12);
  return {total, bound, join_routes(routes)};
}

EvalResult expr_eval(const Expr& e, std::complex<double> z0, const EvalConfig& cfg) {
  return numexpr_eval(substitute_z(e, z0), cfg);
}

double distance(const EvalResult& a, const EvalResult& b) { return (a.value - b.value).abs_bound(); }

bool agree(const EvalResult& a, const EvalResult& b, double slack) {
  return distance(a, b) <= a.bound + b.bound + slack;
}

}  // namespace mtz
