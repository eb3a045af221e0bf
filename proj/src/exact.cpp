#include "mtz/exact.hpp"

#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace mtz {

namespace {

std::shared_mutex bern_mutex;
std::vector<Rational> bern_cache{Rational(1)};

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  {
    std::shared_lock lock(bern_mutex);
    if (n < static_cast<int>(bern_cache.size())) return bern_cache[n];
  }
  std::unique_lock lock(bern_mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0
  for (int m = static_cast<int>(bern_cache.size()); m <= n; ++m) {
    if (m > 1 && m % 2 == 1) {
      bern_cache.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    for (int k = 0; k < m; ++k) {
      if (bern_cache[k] == 0) continue;
      acc += Rational(binomial(m + 1, k)) * bern_cache[k];
    }
    bern_cache.push_back(-acc / Rational(m + 1));
  }
  return bern_cache[n];
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer multinomial(std::span<const long> parts) {
  for (long p : parts)
    if (p < 0) return 0;
  Integer r = 1;
  long run = 0;
  for (long p : parts) {
    run += p;
    r *= binomial(run, p);
  }
  return r;
}

std::vector<Rational> bernoulli_poly(int n) {
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = Rational(binomial(n, k)) * bernoulli(n - k);
  return c;
}

Rational poly_eval(std::span<const Rational> coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational c_const(std::span<const int> s) {
  if (s.empty()) throw std::invalid_argument("c_const: empty vector");
  // Odometer over r_j in [0, s_j].
  std::vector<int> r(s.size(), 0);
  Rational total = 0;
  while (true) {
    Rational term = 1;
    int rsum = 0;
    for (std::size_t j = 0; j < s.size() && term != 0; ++j) {
      term *= Rational(binomial(s[j], r[j])) * bernoulli(s[j] - r[j]);
      rsum += r[j];
    }
    if (term != 0) total += term / Rational(rsum + 1);
    std::size_t j = 0;
    while (j < s.size() && r[j] == s[j]) r[j++] = 0;
    if (j == s.size()) break;
    ++r[j];
  }
  return total;
}

Rational parse_rational(std::string_view text) {
  std::string t(text);
  auto trim = [](std::string& x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front()))) x.erase(x.begin());
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back()))) x.pop_back();
  };
  trim(t);
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto check_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!check_int(num) || !check_int(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(Integer(num), d);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational frac_part(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer m = n % d;
  if (m < 0) m += d;
  return Rational(m, d);
}

}  // namespace mtz
