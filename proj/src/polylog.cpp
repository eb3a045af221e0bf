#include "mtz/errors.hpp"
#include "mtz/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mtz {

namespace {

// Letters of iterated integrals: 0, e(theta), or 1 - e(theta) with theta != 0.
enum LetterKind : int { kZero = 0, kRoot = 1, kOneMinusRoot = 2 };
using Letter = std::pair<int, Rational>;
using Word = std::vector<Letter>;

Letter complement(const Letter& l) {
  switch (l.first) {
    case kZero: return {kRoot, 0};
    case kRoot: return l.second == 0 ? Letter{kZero, 0} : Letter{kOneMinusRoot, l.second};
    default: return {kRoot, l.second};
  }
}

double modulus(const Letter& l) {
  if (l.first == kZero) return 0;
  if (l.first == kRoot) return 1;
  return 2 * std::abs(std::sin(std::numbers::pi * l.second.convert_to<double>()));
}

Complex letter_value(const Letter& l, mpfr_prec_t p) {
  Complex r = root_of_unity(l.second, p);
  if (l.first == kRoot) return r;
  return {Real(1.0, p) - r.re, -r.im};
}

Complex divide(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

double log_choose(double n, double k) { return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1); }

// log of sum_{n > N} C(n-1, k-1) rho^n, or +inf when the ratio test fails.
double log_tail(long N, long k, double rho) {
  double theta = rho * (N + 1.0) / (N + 2.0 - k);
  if (N + 2 <= k || theta >= 1) return std::numeric_limits<double>::infinity();
  return log_choose(N, k - 1) + (N + 1) * std::log(rho) - std::log1p(-theta);
}

// G(word; y) for a word ending in a nonzero letter, as the nested series
// (-1)^k sum_{n_1 > ... > n_k} prod X_i^{n_i - n_{i+1}} / n_i^{m_i}, X_i = y / b_i.
PolylogCache::Entry eval_g(const Word& w, const Rational& y, const EvalConfig& cfg) {
  mpfr_prec_t p = cfg.precision_bits;
  if (w.empty()) return {Complex{Real(1.0, p), Real(p)}, 0};
  if (w.back().first == kZero) throw std::logic_error("eval_g: trailing zero letter");
  std::vector<long> m;
  std::vector<Letter> b;
  long zeros = 0;
  for (auto& l : w) {
    if (l.first == kZero) {
      ++zeros;
    } else {
      m.push_back(zeros + 1);
      b.push_back(l);
      zeros = 0;
    }
  }
  long k = static_cast<long>(m.size());
  double yd = y.convert_to<double>();
  double rho = 0;
  for (auto& l : b) rho = std::max(rho, yd / modulus(l));
  rho *= 1 + 1e-12;
  if (!(rho < 1)) throw DomainError("polylog: Hoelder split does not converge for these colors");

  double log_tol = std::log(cfg.target_tol);
  long N = k;
  while (log_tail(N, k, rho) > log_tol && N < cfg.max_terms) N = N < 64 ? N + 8 : N + N / 4;
  double tail = std::exp(log_tail(N, k, rho));
  if (!std::isfinite(tail)) throw BudgetExceeded("polylog: truncation budget exhausted");

  Real yr(y, p);
  std::vector<Complex> X;
  std::vector<double> Xa;
  for (auto& l : b) {
    X.push_back(divide(Complex{yr, Real(p)}, letter_value(l, p)));
    Xa.push_back(yd / modulus(l) * (1 + 1e-12));
  }
  std::vector<Complex> H(k, Complex(p));
  std::vector<double> Ha(k, 0.0);
  H[k - 1] = X[k - 1];
  Ha[k - 1] = Xa[k - 1];
  Complex sum(p);
  double abs_sum = 0;
  std::vector<Complex> T(k, Complex(p));
  std::vector<double> Ta(k, 0.0);
  std::map<long, Real> inv;
  for (long n = 1; n <= N; ++n) {
    inv.clear();
    for (long i = 0; i < k; ++i) {
      auto it = inv.find(m[i]);
      if (it == inv.end()) {
        Real v(1.0, p);
        Real nn(static_cast<double>(n), p);
        v /= pow_ui(nn, m[i]);
        it = inv.emplace(m[i], std::move(v)).first;
      }
      T[i] = H[i] * it->second;
      Ta[i] = Ha[i] * std::pow(static_cast<double>(n), -static_cast<double>(m[i]));
    }
    sum += T[0];
    abs_sum += Ta[0];
    for (long i = 0; i + 1 < k; ++i) {
      H[i] += T[i + 1];
      H[i] *= X[i];
      Ha[i] = (Ha[i] + Ta[i + 1]) * Xa[i];
    }
    H[k - 1] *= X[k - 1];
    Ha[k - 1] *= Xa[k - 1];
  }
  if (k % 2) sum = Complex(p) - sum;
  double roundoff = (8.0 * (k + 2) * N + 32) * unit_roundoff(p) * abs_sum * (1 + 1e-9);
  return {sum, tail + roundoff};
}

const PolylogCache::Entry& cached_g(const Word& w, const Rational& y, const EvalConfig& cfg, PolylogCache& cache) {
  auto key = std::make_pair(w, y);
  auto it = cache.table.find(key);
  if (it != cache.table.end()) return it->second;
  return cache.table.emplace(std::move(key), eval_g(w, y, cfg)).first->second;
}

}  // namespace

EvalResult mzv_eval(const std::vector<long>& exps, const std::vector<Rational>& colors, const EvalConfig& cfg,
                    PolylogCache* cache) {
  if (exps.empty() || colors.size() != exps.size())
    throw std::invalid_argument("mzv_eval: exponent/color length mismatch");
  for (long s : exps)
    if (s < 1) throw DomainError("mzv_eval: exponents must be positive integers");
  if (exps[0] == 1 && frac_part(colors[0]) == 0) throw DomainError("mzv_eval: divergent (leading 1 with trivial color)");
  PolylogCache local;
  PolylogCache& c = cache ? *cache : local;
  mpfr_prec_t p = cfg.precision_bits;

  // value = (-1)^k G(0^{s_1-1} b_1 ... 0^{s_k-1} b_k; 1) with b_i = e(-(c_1 + ... + c_i))
  Word word;
  Rational theta = 0;
  double delta = 1;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    theta = frac_part(theta - colors[i]);
    for (long z = 1; z < exps[i]; ++z) word.push_back({kZero, 0});
    word.push_back({kRoot, theta});
    if (theta != 0) delta = std::min(delta, modulus({kOneMinusRoot, theta}));
  }
  // split point t: both halves then converge at rate max(t, (1 - t) / delta)
  Rational t(1, 2);
  if (delta < 1) {
    long num = static_cast<long>(std::ceil(64 / (1 + delta)));
    t = Rational(std::min<long>(num, 63), 64);
  }
  Rational u = 1 - t;
  long w = static_cast<long>(word.size());
  Complex total(p);
  double bound = 0, abs_total = 0;
  Word head;  // complemented and reversed prefix
  for (long j = 0; j <= w; ++j) {
    if (j > 0) head.insert(head.begin(), complement(word[j - 1]));
    Word rest(word.begin() + j, word.end());
    const auto& g1 = cached_g(head, u, cfg, c);
    const auto& g2 = cached_g(rest, t, cfg, c);
    Complex prod = g1.value * g2.value;
    double a1 = g1.value.abs_bound(), a2 = g2.value.abs_bound();
    bound += a1 * g2.bound + a2 * g1.bound + g1.bound * g2.bound;
    abs_total += a1 * a2;
    if (j % 2) total -= prod;
    else total += prod;
  }
  if (exps.size() % 2) total = Complex(p) - total;
  bound += (4.0 * w + 16) * unit_roundoff(p) * abs_total;
  return {total, bound * (1 + 1e-9), "holder"};
}

DoubleEval mzv_eval_dp(const std::vector<long>& exps, const std::vector<Rational>& colors, int N) {
  std::size_t k = exps.size();
  if (k == 0 || colors.size() != k) throw std::invalid_argument("mzv_eval_dp: exponent/color length mismatch");
  if (exps[0] < 2) throw DomainError("mzv_eval_dp: needs a leading exponent >= 2");
  for (long s : exps)
    if (s < 1) throw DomainError("mzv_eval_dp: exponents must be positive");
  if (N < 3) throw std::invalid_argument("mzv_eval_dp: N must be at least 3");
  using cd = std::complex<double>;
  std::vector<cd> below(N + 1, 1.0);
  cd value = 0;
  double abs_sum = 0;
  for (std::size_t d = k; d-- > 0;) {
    std::vector<cd> cur(N + 1, 0.0);
    cd run = 0;
    double c = colors[d].convert_to<double>();
    for (int n = 1; n <= N; ++n) {
      cur[n] = run;
      cd term = below[n] * std::polar(1.0, 2 * std::numbers::pi * c * n) *
                std::pow(static_cast<double>(n), -static_cast<double>(exps[d]));
      run += term;
      if (d == 0) abs_sum += std::abs(term);
    }
    if (d == 0) value = run;
    below = cur;
  }
  // tail over n_1 > N of (1 + log n)^{k-1} / ((k-1)! n^{s_1}), by the integral in u = 1 + log x
  double L = 1 + std::log(static_cast<double>(N));
  double pexp = static_cast<double>(exps[0]) - 1;
  long q = static_cast<long>(k) - 1;
  double acc = 0, fall = 1;
  for (long j = 0; j <= q; ++j) {
    if (j > 0) fall *= static_cast<double>(q - j + 1);
    acc += fall * std::pow(L, static_cast<double>(q - j)) / std::pow(pexp, static_cast<double>(j + 1));
  }
  double tail = std::exp(-pexp * (L - 1)) * acc / std::tgamma(static_cast<double>(k));
  // the integrand must already be decreasing at N
  if (pexp + 1 <= q / L) tail = std::numeric_limits<double>::infinity();
  double eps = std::numeric_limits<double>::epsilon();
  return {value, tail + 8.0 * k * N * eps * abs_sum};
}

}  // namespace mtz
