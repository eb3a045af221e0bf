#include "mtz/mzv_convert.hpp"

#include "mtz/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <tuple>

namespace mtz {

namespace {

Atom zeta_word(const std::vector<long>& e) {
  std::vector<AffineExp> x;
  for (long v : e) x.push_back(iexp(v));
  return mzv(std::move(x), std::vector<Rational>(e.size(), Rational(0)));
}

void require_positive(const std::vector<long>& v, const char* who) {
  for (long x : v)
    if (x < 1) throw std::invalid_argument(std::string(who) + ": exponents must be positive integers");
}

void require_convergent(const std::vector<long>& exps, const char* who) {
  std::vector<double> summed(exps.begin(), exps.end() - 1);
  if (!mt_converges(summed, static_cast<double>(exps.back())))
    throw DomainError(std::string(who) + ": series diverges");
}

// A linear form sum_{j in mask} m_j raised to -exp, carrying phase e(color * form).
struct Form {
  unsigned mask;
  long exp;
  Rational color;
  auto key() const { return std::tie(mask, exp, color); }
  bool operator<(const Form& o) const { return key() < o.key(); }
};

using State = std::vector<Form>;  // sorted by mask, masks distinct

bool subset(unsigned a, unsigned b) { return (a & b) == a; }

bool is_chain(const State& st) {
  for (std::size_t i = 0; i < st.size(); ++i)
    for (std::size_t j = i + 1; j < st.size(); ++j)
      if (!subset(st[i].mask, st[j].mask) && !subset(st[j].mask, st[i].mask)) return false;
  return true;
}

unsigned parent_of(const State& st, unsigned m) {
  unsigned best = 0;
  for (auto& f : st)
    if (f.mask != m && subset(m, f.mask) && (best == 0 || std::popcount(f.mask) < std::popcount(best)))
      best = f.mask;
  return best;
}

// Two disjoint members with the same parent; the pair with the lowest
// variable indices wins.
std::pair<std::size_t, std::size_t> pick_siblings(const State& st) {
  std::pair<std::size_t, std::size_t> best{st.size(), st.size()};
  std::pair<int, int> rank{1 << 30, 1 << 30};
  for (std::size_t i = 0; i < st.size(); ++i)
    for (std::size_t j = 0; j < st.size(); ++j) {
      if (i == j || (st[i].mask & st[j].mask)) continue;
      if (parent_of(st, st[i].mask) != parent_of(st, st[j].mask)) continue;
      std::pair<int, int> r{std::countr_zero(st[i].mask), std::countr_zero(st[j].mask)};
      if (r < rank) {
        rank = r;
        best = {i, j};
      }
    }
  return best;
}

void insert_form(State& st, const Form& f) {
  for (auto& g : st)
    if (g.mask == f.mask) {
      g.exp += f.exp;
      g.color = frac_part(g.color + f.color);
      return;
    }
  st.push_back(f);
  std::sort(st.begin(), st.end(), [](const Form& x, const Form& y) { return x.mask < y.mask; });
}

}  // namespace

Expr per_sum(const std::vector<long>& x, const std::function<Expr(const std::vector<long>&)>& f) {
  Expr out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    std::vector<long> y;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != j) y.push_back(x[i]);
    y.push_back(x[j]);
    out += f(y);
  }
  return out;
}

bool mt_converges(std::vector<double> summed, double last) {
  std::sort(summed.begin(), summed.end());
  double acc = last;
  for (std::size_t r = 0; r < summed.size(); ++r) {
    acc += summed[r];
    if (!(acc > static_cast<double>(r + 1))) return false;
  }
  return true;
}

Expr mt_to_mzv_depth2(long a, long b, long c) {
  require_positive({a, b, c}, "mt_to_mzv_depth2");
  require_convergent({a, b, c}, "mt_to_mzv_depth2");
  return per_sum({a, b}, [c](const std::vector<long>& v) {
    long x = v[0], y = v[1];
    Expr e;
    for (long nu = 0; nu < y; ++nu) e.add_term(Rational(binomial(x + nu - 1, nu)), {zeta_word({c + x + nu, y - nu})});
    return e;
  });
}

Expr mt_to_mzv_depth3(long a, long b, long c, long d) {
  require_positive({a, b, c, d}, "mt_to_mzv_depth3");
  require_convergent({a, b, c, d}, "mt_to_mzv_depth3");
  return per_sum({a, b, c}, [d](const std::vector<long>& v) {
    long x = v[0], y = v[1], w = v[2];
    Expr e;
    for (long n1 = 0; n1 < x; ++n1)
      for (long n2 = 0; n2 < y; ++n2) {
        long parts[] = {n1, n2, w - 1};
        Rational m(multinomial(parts));
        long lead = w + d + n1 + n2;
        for (long n3 = 0; n3 <= x - n1 - 1; ++n3)
          e.add_term(m * Rational(binomial(y - n2 + n3 - 1, n3)), {zeta_word({lead, y - n2 + n3, x - n1 - n3})});
        for (long n3 = 0; n3 <= y - n2 - 1; ++n3)
          e.add_term(m * Rational(binomial(x - n1 + n3 - 1, n3)), {zeta_word({lead, x - n1 + n3, y - n2 - n3})});
      }
    return e;
  });
}

std::vector<PfTerm> pf_split(long a, long b) {
  if (a < 1 || b < 1) throw std::invalid_argument("pf_split: exponents must be positive");
  std::vector<PfTerm> out;
  for (long i = 0; i < a; ++i) out.push_back({true, a - i, b + i, binomial(b - 1 + i, i)});
  for (long i = 0; i < b; ++i) out.push_back({false, b - i, a + i, binomial(a - 1 + i, i)});
  return out;
}

Expr mt_to_mzv_general(const std::vector<long>& exps, const std::vector<Rational>& colors) {
  if (exps.size() < 2 || colors.size() != exps.size())
    throw std::invalid_argument("mt_to_mzv_general: need k+1 >= 2 exponents with matching colors");
  std::size_t k = exps.size() - 1;
  if (k > 30) throw std::invalid_argument("mt_to_mzv_general: depth too large");
  require_positive(exps, "mt_to_mzv_general");
  require_convergent(exps, "mt_to_mzv_general");
  if (k == 1) return Expr(mzv({iexp(exps[0] + exps[1])}, {frac_part(colors[0] + colors[1])}));

  State init;
  for (std::size_t j = 0; j < k; ++j) init.push_back({1u << j, exps[j], frac_part(colors[j])});
  init.push_back({(1u << k) - 1, exps[k], frac_part(colors[k])});

  Expr out;
  std::map<State, Rational> gen{{init, Rational(1)}};
  while (!gen.empty()) {
    std::map<State, Rational> next;
    for (auto& [st, coeff] : gen) {
      if (is_chain(st)) {
        std::vector<Form> chain = st;
        std::sort(chain.begin(), chain.end(),
                  [](const Form& x, const Form& y) { return std::popcount(x.mask) > std::popcount(y.mask); });
        if (chain.size() != k) throw std::logic_error("mt_to_mzv_general: chain is not a full flag");
        std::vector<AffineExp> e;
        std::vector<Rational> c;
        for (auto& f : chain) {
          e.push_back(iexp(f.exp));
          c.push_back(f.color);
        }
        out.add_term(coeff, {mzv(std::move(e), std::move(c))});
        continue;
      }
      auto [ia, ib] = pick_siblings(st);
      if (ia == st.size()) throw std::logic_error("mt_to_mzv_general: no sibling pair");
      const Form A = st[ia], B = st[ib];
      State rest;
      for (std::size_t t = 0; t < st.size(); ++t)
        if (t != ia && t != ib) rest.push_back(st[t]);
      for (const PfTerm& t : pf_split(A.exp, B.exp)) {
        State ns = rest;
        const Form& kept = t.keep_first ? A : B;
        const Form& gone = t.keep_first ? B : A;
        insert_form(ns, {kept.mask, t.kept_exp, frac_part(kept.color - gone.color)});
        insert_form(ns, {A.mask | B.mask, t.union_exp, gone.color});
        next[ns] += coeff * Rational(t.coeff);
      }
    }
    gen = std::move(next);
  }
  return out;
}

Expr convert_mt_atoms(const Expr& e) {
  Expr out;
  for (auto& [key, c] : e.terms()) {
    Expr term(c);
    for (auto& a : key) {
      if (a.kind == AtomKind::MT && !a.has_z()) {
        std::vector<long> x;
        for (auto& v : a.exps) x.push_back(v.a);
        term = term * mt_to_mzv_general(x, a.colors);
      } else {
        term = term * Expr(a);
      }
    }
    out += term;
  }
  return out;
}

}  // namespace mtz
