#include "mtz/reduction.hpp"

#include "mtz/kernels.hpp"
#include "mtz/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace mtz {

namespace {

Rational sign_pow(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational binom(long n, long k) { return Rational(binomial(n, k)); }

Rational multinom(std::vector<long> parts) { return Rational(multinomial(parts)); }

std::vector<int> complement(const std::vector<int>& i, int k) {
  std::vector<int> out;
  std::size_t p = 0;
  for (int j = 0; j < k; ++j) {
    if (p < i.size() && i[p] == j)
      ++p;
    else
      out.push_back(j);
  }
  return out;
}

void check_subset(const std::vector<int>& i, int k) {
  for (std::size_t a = 0; a < i.size(); ++a) {
    if (i[a] < 0 || i[a] >= k) throw std::invalid_argument("index subset out of range");
    if (a && i[a] <= i[a - 1]) throw std::invalid_argument("index subset must be increasing");
  }
}

}  // namespace

Expr Identity::lhs_expr() const {
  Expr e;
  for (auto& t : lhs) e.add_term(t.sign, {t.atom});
  return e;
}

nlohmann::json to_json(const Identity& id) {
  nlohmann::json j;
  j["schema"] = "mtz.identity/1";
  j["s"] = id.s;
  j["k"] = id.k;
  j["alpha"] = to_string(id.alpha);
  auto& lhs = j["lhs"] = nlohmann::json::array();
  for (auto& t : id.lhs) lhs.push_back({{"sign", to_string(t.sign)}, {"atom", to_json(t.atom)}});
  j["rhs"] = to_json(id.rhs);
  return j;
}

Identity identity_from_json(const nlohmann::json& j) {
  if (j.at("schema") != "mtz.identity/1") throw std::invalid_argument("unsupported identity schema");
  Identity id;
  id.s = j.at("s").get<std::vector<int>>();
  id.k = j.at("k").get<int>();
  id.alpha = parse_rational(j.at("alpha").get<std::string>());
  for (auto& t : j.at("lhs"))
    id.lhs.push_back({parse_rational(t.at("sign").get<std::string>()), atom_from_json(t.at("atom"))});
  id.rhs = expr_from_json(j.at("rhs"));
  return id;
}

Atom f_atom(const std::vector<int>& s, const std::vector<int>& i, const Rational& alpha, long n) {
  std::vector<AffineExp> exps;
  std::vector<Rational> colors;
  for (int j : complement(i, static_cast<int>(s.size()))) {
    exps.push_back(iexp(s[j]));
    colors.push_back(0);
  }
  exps.push_back(zexp());
  colors.push_back(alpha);
  exps.push_back(iexp(n));
  colors.push_back(0);
  return mt(std::move(exps), std::move(colors));
}

Expr e_expr(const std::vector<int>& s, const std::vector<int>& i, const Rational& alpha) {
  int k = static_cast<int>(s.size());
  check_subset(i, k);
  if (i.size() < 2) throw std::invalid_argument("e_expr: index subset needs at least two elements");
  std::vector<int> si;
  for (int j : i) si.push_back(s[j]);
  int w = std::accumulate(si.begin(), si.end(), 0);
  Expr out;
  for (const auto& p : enumerate_partitions(si, PartitionKind::PreFat)) {
    int q = p.num_parts();
    Rational pre = sign_pow(w) * Rational(Integer(1) << (static_cast<int>(i.size()) - q));
    for (const auto& r : index_assignments(p, PartitionKind::PreFat)) {
      Rational coeff = pre;
      std::vector<Atom> atoms;
      for (int j = 0; j < q && coeff != 0; ++j) {
        auto part = p.part(j);
        const auto& rj = r[j];
        int sigma = part[0];
        int rsum = 0;
        // c_{j,i} for i = 2..len(r_j)+1 (here ii = i - 1 is 0-based into r_j)
        for (std::size_t ii = 0; ii < rj.size(); ++ii) {
          int sji = part[ii + 1];
          sigma += sji;
          rsum += rj[ii];
          int top = sigma - 2 * rsum - 1;
          coeff *= binom(top, sji - 1) + binom(top, sji - 2 * rj[ii]);
          atoms.push_back(even_zeta(2 * rj[ii]));
        }
        int deg = p.weight(j) - 2 * rsum;
        if (j + 1 < q) {
          coeff *= sign_pow(part.back());
          atoms.push_back(tilde_zeta(deg));
        } else {
          atoms.push_back(f_atom(s, i, alpha, deg));
        }
      }
      out.add_term(coeff, std::move(atoms));
    }
  }
  return out;
}

Identity theorem_identity(const std::vector<int>& s, const Rational& alpha) {
  int k = static_cast<int>(s.size());
  if (k < 2) throw std::invalid_argument("theorem_identity: depth must be at least 2");
  for (int v : s)
    if (v < 1) throw std::invalid_argument("theorem_identity: entries must be positive");
  Identity id;
  id.s = s;
  id.alpha = frac_part(alpha);
  id.k = k;
  int w = std::accumulate(s.begin(), s.end(), 0);
  {
    std::vector<AffineExp> exps;
    for (int v : s) exps.push_back(iexp(v));
    exps.push_back(zexp());
    std::vector<Rational> colors(k + 1, Rational(0));
    colors[k] = alpha;
    id.lhs.push_back({sign_pow(k + w), mt(exps, colors)});
  }
  for (int j = 0; j < k; ++j) {
    std::vector<AffineExp> exps;
    std::vector<Rational> colors(k + 1, Rational(0));
    for (int v : s) exps.push_back(iexp(v));
    exps[j] = zexp();
    colors[j] = alpha;
    exps.push_back(iexp(s[j]));
    id.lhs.push_back({sign_pow(s[j]), mt(exps, colors)});
  }
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> i;
    for (int j = 0; j < k; ++j)
      if (mask >> j & 1) i.push_back(j);
    if (i.size() < 2) continue;
    id.rhs += scale(sign_pow(static_cast<long>(i.size())), e_expr(s, i, alpha));
  }
  return id;
}

Identity cor_depth2(int a, int b, const Rational& alpha) {
  if (a < 1 || b < 1) throw std::invalid_argument("cor_depth2: entries must be positive");
  Identity id;
  id.s = {a, b};
  id.alpha = frac_part(alpha);
  id.k = 2;
  id.lhs.push_back({1, mt({iexp(a), iexp(b), zexp()}, {0, 0, alpha})});
  id.lhs.push_back({sign_pow(b), mt({zexp(), iexp(b), iexp(a)}, {alpha, 0, 0})});
  id.lhs.push_back({sign_pow(a), mt({iexp(a), zexp(), iexp(b)}, {0, alpha, 0})});
  for (int r = 0; r <= std::max(a, b) / 2; ++r) {
    long top = a + b - 2 * r - 1;
    Rational c = 2 * (binom(top, a - 1) + binom(top, a - 2 * r));
    id.rhs.add_term(c, {even_zeta(2 * r), lerch(zexp(a + b - 2 * r), alpha)});
  }
  return id;
}

Expr e2(int n, const Rational& alpha) {
  Expr e;
  for (int r = 0; r <= n / 2; ++r)
    e.add_term(4 * binom(2 * n - 2 * r - 1, n - 1),
               {even_zeta(2 * r),
                mt({iexp(n), iexp(n), zexp(), iexp(2 * n - 2 * r)}, {0, 0, alpha, 0})});
  return e;
}

Expr e3(int n, const Rational& alpha) {
  Expr e;
  e.add_term(2, {even_zeta(2 * n), mt({iexp(n), zexp(), iexp(n)}, {0, alpha, 0})});
  Rational sgn = 8 * sign_pow(n);
  for (int mu = 0; mu <= n / 2; ++mu)
    for (int nu = 0; nu <= std::max(2 * n - 2 * mu, n) / 2; ++nu) {
      long top = 3 * n - 2 * mu - 2 * nu - 1;
      if (top < 0) continue;
      Rational br = binom(2 * n - 2 * mu - 1, n - 1) * binom(top, n - 1) +
                    multinom({n - 2 * mu, n - 1, n - 2 * nu});
      e.add_term(sgn * br, {even_zeta(2 * mu), even_zeta(2 * nu),
                            mt({iexp(n), zexp(), iexp(top + 1)}, {0, alpha, 0})});
    }
  return e;
}

Expr e4(int n, const Rational& alpha) {
  Expr e;
  for (int mu = 0; mu <= n / 2; ++mu)
    for (int nu = 0; nu <= std::max(2 * n - 2 * mu, n) / 2; ++nu)
      for (int la = 0; la <= std::max(3 * n - 2 * mu - 2 * nu, n) / 2; ++la) {
        long A = 2 * n - 2 * mu - 1;
        long B = 3 * n - 2 * mu - 2 * nu - 1;
        long D = 4 * n - 2 * mu - 2 * nu - 2 * la - 1;
        if (B < 0 || D < 0) continue;
        Rational br = binom(A, n - 1) * binom(B, n - 1) * binom(D, n - 1) +
                      multinom({n - 2 * mu, n - 1, n - 2 * nu}) * binom(D, n - 1) +
                      binom(A, n - 1) * multinom({2 * n - 2 * mu - 2 * nu, n - 1, n - 2 * la}) +
                      multinom({n - 2 * mu, n - 1, n - 2 * nu, n - 2 * la});
        e.add_term(16 * br, {even_zeta(2 * mu), even_zeta(2 * nu), even_zeta(2 * la),
                             lerch(zexp(D + 1), alpha)});
      }
  for (int mu = 0; mu <= n / 2; ++mu) {
    Rational c = binom(2 * n - 2 * mu - 1, n - 1);
    e.add_term(8 * sign_pow(n) * c,
               {even_zeta(2 * n), even_zeta(2 * mu), lerch(zexp(2 * n - 2 * mu), alpha)});
    e.add_term(8 * c, {even_zeta(2 * mu), tilde_zeta(3 * n - 2 * mu), lerch(zexp(n), alpha)});
  }
  return e;
}

Identity cor_specialn(int n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("cor_specialn: n must be positive");
  Identity id;
  id.s = {n, n, n, n};
  id.alpha = frac_part(alpha);
  id.k = 4;
  id.lhs.push_back({1, mt({iexp(n), iexp(n), iexp(n), iexp(n), zexp()}, {0, 0, 0, 0, alpha})});
  id.lhs.push_back({4 * sign_pow(n), mt({iexp(n), iexp(n), iexp(n), zexp(), iexp(n)}, {0, 0, 0, alpha, 0})});
  id.rhs = scale(6, e2(n, alpha)) - scale(4, e3(n, alpha)) + e4(n, alpha);
  return id;
}

Identity cor_special1(const Rational& alpha) {
  Identity id;
  id.s = {1, 1, 1, 1};
  id.alpha = frac_part(alpha);
  id.k = 4;
  id.lhs.push_back({4, mt({iexp(1), iexp(1), iexp(1), zexp(), iexp(1)}, {0, 0, 0, alpha, 0})});
  id.lhs.push_back({-1, mt({iexp(1), iexp(1), iexp(1), iexp(1), zexp()}, {0, 0, 0, 0, alpha})});
  id.rhs.add_term(12, {mt({iexp(1), iexp(1), zexp(), iexp(2)}, {0, 0, alpha, 0})});
  id.rhs.add_term(24, {even_zeta(2), mt({iexp(1), zexp(), iexp(1)}, {0, alpha, 0})});
  id.rhs.add_term(-24, {mt({iexp(1), zexp(), iexp(3)}, {0, alpha, 0})});
  id.rhs.add_term(-24, {even_zeta(2), lerch(zexp(2), alpha)});
  id.rhs.add_term(24, {lerch(zexp(4), alpha)});
  return id;
}

ExprPair cor_further(int n) {
  if (n < 1) throw std::invalid_argument("cor_further: n must be positive");
  auto Z = [](std::vector<long> e) {
    std::vector<AffineExp> x;
    for (long v : e) x.push_back(iexp(v));
    return mzv(std::move(x), std::vector<Rational>(e.size(), Rational(0)));
  };
  ExprPair out;
  out.lhs.add_term(4, {mt({1, 1, 1, n, 1})});
  out.lhs.add_term(-1, {mt({1, 1, 1, 1, n})});
  Expr& r = out.rhs;
  r.add_term(2, {Z({n + 4})});
  r.add_term(-2, {Z({n + 3, 1})});
  r.add_term(2, {Z({n + 2, 1, 1})});
  r.add_term(2, {even_zeta(2), Z({n + 1, 1})});
  r.add_term(-2, {even_zeta(2), Z({n + 2})});
  for (int nu = 0; nu <= n - 1; ++nu)
    for (int mu = 0; mu <= n - 1 - nu; ++mu) {
      r.add_term(1, {Z({3 + nu, 1 + mu, n - nu - mu})});
      r.add_term(1, {Z({3 + nu, n - nu - mu, 1 + mu})});
    }
  for (int nu = 0; nu <= n - 1; ++nu) {
    r.add_term(2, {even_zeta(2), Z({2 + nu, n - nu})});
    r.add_term(-2, {Z({4 + nu, n - nu})});
    r.add_term(2, {Z({3 + nu, n - nu, 1})});
  }
  out.rhs = scale(12, r);
  return out;
}

namespace {

FiniteNResult finite_n_impl(const std::vector<int>& s, const std::vector<int>& i, const Rational& alpha,
                            std::complex<double> z0, int N, bool parallel) {
  int k = static_cast<int>(s.size());
  check_subset(i, k);
  if (i.empty()) throw std::invalid_argument("finite_n_oracle: empty index subset");
  if (N < 1) throw std::invalid_argument("finite_n_oracle: N must be positive");
  double a = frac_part(alpha).convert_to<double>();
  std::vector<bool> in_i(k, false);
  for (int j : i) in_i[j] = true;

  std::vector<kernels::Laurent> factors;
  for (int j = 0; j < k; ++j) factors.push_back(kernels::power_series(s[j], 0, N, in_i[j]));
  factors.push_back(kernels::power_series(z0, a, N, false));
  FiniteNResult res;
  res.lhs = parallel ? kernels::zero_frequency(factors, N) : kernels::zero_frequency_serial(factors, N);

  // Sum over sign patterns J within i of the constrained truncated sums.
  std::vector<std::vector<double>> inv(k, std::vector<double>(N + 1));
  for (int j = 0; j < k; ++j)
    for (int m = 1; m <= N; ++m) inv[j][m] = std::pow(static_cast<double>(m), -s[j]);
  std::vector<std::complex<double>> zpart(N + 1);
  for (int m = 1; m <= N; ++m)
    zpart[m] = std::polar(1.0, 2 * std::numbers::pi * a * m) * std::exp(-z0 * std::log(static_cast<double>(m)));
  std::complex<double> total = 0;
  for (unsigned mask = 1; mask < (1u << i.size()); ++mask) {
    std::vector<int> sign(k, 1);
    int sw = 0;
    for (std::size_t t = 0; t < i.size(); ++t)
      if (mask >> t & 1) {
        sign[i[t]] = -1;
        sw += s[i[t]];
      }
    std::vector<int> m(k, 1);
    std::complex<double> acc = 0;
    while (true) {
      // m_{k+1} = sum over J minus sum over the rest
      int mk = 0;
      double prod = 1;
      for (int j = 0; j < k; ++j) {
        mk += sign[j] * m[j];
        prod *= inv[j][m[j]];
      }
      mk = -mk;
      if (mk >= 1 && mk <= N) acc += prod * zpart[mk];
      int j = 0;
      while (j < k && m[j] == N) m[j++] = 1;
      if (j == k) break;
      ++m[j];
    }
    total += (sw % 2 ? -1.0 : 1.0) * acc;
  }
  res.rhs = total;
  return res;
}

}  // namespace

FiniteNResult finite_n_oracle(const std::vector<int>& s, const std::vector<int>& i, const Rational& alpha,
                              std::complex<double> z0, int N) {
  return finite_n_impl(s, i, alpha, z0, N, true);
}

FiniteNResult finite_n_oracle_serial(const std::vector<int>& s, const std::vector<int>& i,
                                     const Rational& alpha, std::complex<double> z0, int N) {
  return finite_n_impl(s, i, alpha, z0, N, false);
}

}  // namespace mtz
