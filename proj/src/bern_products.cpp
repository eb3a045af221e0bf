#include "mtz/bern_products.hpp"

#include "mtz/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace mtz {

void BernCombo::add(int degree, const Rational& c) {
  if (c == 0) return;
  if (degree == 0) {
    constant += c;
    return;
  }
  auto [it, fresh] = terms.try_emplace(degree, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BernCombo naive_product(std::span<const int> s) {
  if (s.empty()) throw std::invalid_argument("naive_product: empty vector");
  std::vector<Rational> poly{Rational(1)};
  for (int sj : s) {
    auto b = bernoulli_poly(sj);
    std::vector<Rational> next(poly.size() + b.size() - 1);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (std::size_t c = 0; c < b.size(); ++c) next[a + c] += poly[a] * b[c];
    poly = std::move(next);
  }
  BernCombo out;
  for (int m = static_cast<int>(poly.size()) - 1; m >= 0; --m) {
    // B_m(x) is monic, so the leading coefficient is the B_m(x) coefficient.
    Rational c = poly[m];
    if (c == 0) continue;
    auto b = bernoulli_poly(m);
    for (int a = 0; a <= m; ++a) poly[a] -= c * b[a];
    out.add(m, c);
  }
  return out;
}

BernCombo carlitz_expand(int s1, int s2) {
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("carlitz_expand: entries must be positive");
  int w = s1 + s2;
  BernCombo out;
  for (int r = 0; r <= std::max(s1, s2) / 2; ++r) {
    Rational c = Rational(binomial(s1, 2 * r) * s2 + binomial(s2, 2 * r) * s1) * bernoulli(2 * r) /
                 Rational(w - 2 * r);
    out.add(w - 2 * r, c);
  }
  Rational sign = s2 % 2 == 0 ? -1 : 1;
  out.constant += sign * Rational(factorial(s1) * factorial(s2), factorial(w)) * bernoulli(w);
  return out;
}

BernCombo berprod_expand(std::span<const int> s) {
  int t = static_cast<int>(s.size());
  if (t < 2) throw std::invalid_argument("berprod_expand: need at least two factors");
  int weight = std::accumulate(s.begin(), s.end(), 0);
  Integer sfact = 1;
  for (int v : s) sfact *= factorial(v);
  BernCombo out;
  for (unsigned mask = 0; mask + 1 < (1u << t); ++mask) {
    std::vector<int> idx;
    for (int a = 0; a < t; ++a)
      if (mask >> a & 1) idx.push_back(a);
    int l = static_cast<int>(idx.size());
    std::vector<int> j(l, 0);
    while (true) {
      auto inf = inflate(j, idx, t);
      int jsum = std::accumulate(j.begin(), j.end(), 0);
      int n = weight - jsum + l - t + 1;
      if (n >= 1) {
        std::vector<long> diff(t);
        for (int a = 0; a < t; ++a) diff[a] = s[a] - inf[a];
        Integer mult = multinomial(diff);
        if (mult != 0) {
          Rational c = Rational(mult);
          for (int v : j) c *= bernoulli(v) / Rational(factorial(v));
          c *= Rational(sfact, factorial(n));
          out.add(n, c);
        }
      }
      int a = 0;
      while (a < l && j[a] == s[idx[a]]) j[a++] = 0;
      if (a == l) break;
      ++j[a];
    }
  }
  out.constant += c_const(s);
  return out;
}

namespace {

struct Factor {
  Rational value = 1;
  int bern_weight = 0;
};

// prod_i b_{j,i} for part `part` and its index vector r.
Factor b_product(std::span<const int> part, std::span<const int> r) {
  Factor f;
  int sigma = part[0];
  int rsum = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    int base = sigma - 2 * rsum;  // sigma_i(P_j) - 2 sigma_{i-1}(r_j)
    int nxt = part[i + 1];
    int ri = r[i];
    Rational bracket = Rational(binomial(base, 2 * ri) * nxt + binomial(nxt, 2 * ri) * base);
    sigma += nxt;
    rsum += ri;
    f.value *= bracket * bernoulli(2 * ri) / Rational(sigma - 2 * rsum);
    f.bern_weight += 2 * ri;
  }
  return f;
}

// B_j(P, r): the Bernoulli-number factor closing a part.
Factor closing(std::span<const int> part, std::span<const int> r) {
  int total = std::accumulate(part.begin(), part.end(), 0);
  int rsum = std::accumulate(r.begin(), r.end(), 0);
  int last = part.back();
  int deg = total - 2 * rsum;
  Factor f;
  Rational sign = last % 2 == 0 ? -1 : 1;
  f.value = sign * Rational(factorial(deg - last) * factorial(last), factorial(deg)) * bernoulli(deg);
  f.bern_weight = deg;
  return f;
}

}  // namespace

std::vector<ProvenanceTerm> bernprodnice_terms(std::span<const int> s) {
  if (s.size() < 2) throw std::invalid_argument("bernprodnice_expand: need at least two factors");
  std::vector<ProvenanceTerm> out;
  for (auto kind : {PartitionKind::PreFat, PartitionKind::Fat}) {
    for (const auto& p : enumerate_partitions(s, kind)) {
      int q = p.num_parts();
      for (const auto& r : index_assignments(p, kind)) {
        Factor acc;
        int degree = -1;
        for (int j = 0; j < q; ++j) {
          auto part = p.part(j);
          Factor b = b_product(part, r[j]);
          acc.value *= b.value;
          acc.bern_weight += b.bern_weight;
          if (j + 1 < q || kind == PartitionKind::Fat) {
            Factor c = closing(part, r[j]);
            acc.value *= c.value;
            acc.bern_weight += c.bern_weight;
          } else {
            int rsum = std::accumulate(r[j].begin(), r[j].end(), 0);
            degree = p.weight(j) - 2 * rsum;
          }
        }
        if (acc.value != 0) out.push_back({degree, acc.value, acc.bern_weight});
      }
    }
  }
  return out;
}

BernCombo bernprodnice_expand(std::span<const int> s) {
  BernCombo out;
  for (const auto& t : bernprodnice_terms(s)) {
    if (t.degree < 0)
      out.constant += t.coeff;
    else
      out.add(t.degree, t.coeff);
  }
  return out;
}

}  // namespace mtz
