#include "mtz/kernels.hpp"

#include "mtz/errors.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

namespace mtz::kernels {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

cplx phase(double angle) { return std::polar(1.0, kTwoPi * angle); }

cplx inv_pow(double m, cplx s) { return std::exp(-s * std::log(m)); }

// c = a * b restricted to output frequencies in [-out_half, out_half].
Laurent convolve(const Laurent& a, int ha, const Laurent& b, int hb, bool parallel) {
  int hc = ha + hb;
  Laurent c(2 * hc + 1);
#pragma omp parallel for schedule(static) if (parallel) num_threads(thread_count())
  for (int f = -hc; f <= hc; ++f) {
    cplx acc = 0;
    int lo = std::max(-ha, f - hb), hi = std::min(ha, f + hb);
    for (int g = lo; g <= hi; ++g) acc += a[g + ha] * b[f - g + hb];
    c[f + hc] = acc;
  }
  return c;
}

cplx zero_freq_impl(const std::vector<Laurent>& factors, int N, bool parallel) {
  if (factors.empty()) return 1;
  Laurent acc = factors[0];
  int h = N;
  for (std::size_t i = 1; i + 1 < factors.size(); ++i) {
    acc = convolve(acc, h, factors[i], N, parallel);
    h += N;
  }
  if (factors.size() == 1) return acc[h];
  const Laurent& last = factors.back();
  double re = 0, im = 0;
#pragma omp parallel for reduction(+ : re, im) schedule(static) if (parallel) num_threads(thread_count())
  for (int f = -N; f <= N; ++f) {
    cplx v = acc[-f + h] * last[f + N];
    re += v.real();
    im += v.imag();
  }
  return {re, im};
}

void check_mt(const std::vector<cplx>& exps, const std::vector<double>& colors, int N) {
  std::size_t d = exps.size() - 1;
  if (exps.size() < 2 || colors.size() != exps.size())
    throw std::invalid_argument("mt_direct: exponent/color length mismatch");
  if (d > 3) throw DomainError("mt_direct: depth above 3; use the conversion route");
  if (N < 3) throw std::invalid_argument("mt_direct: N must be at least 3");
  for (std::size_t i = 0; i < d; ++i)
    if (exps[i].real() < 1) throw DomainError("mt_direct: summed exponents need Re >= 1");
  for (std::size_t i = 0; i < d; ++i)
    if (exps[i].real() + exps[d].real() <= 1)
      throw DomainError("mt_direct: outside the absolute convergence domain");
}

DirectSum mt_impl(const std::vector<cplx>& exps, const std::vector<double>& colors, int N,
                  bool parallel) {
  check_mt(exps, colors, N);
  int d = static_cast<int>(exps.size()) - 1;
  // one-sided sequences on 0..N (index 0 unused)
  std::vector<std::vector<cplx>> f(d, std::vector<cplx>(N + 1));
  std::vector<std::vector<double>> fa(d, std::vector<double>(N + 1));
  for (int i = 0; i < d; ++i)
    for (int m = 1; m <= N; ++m) {
      f[i][m] = phase(colors[i] * m) * inv_pow(m, exps[i]);
      fa[i][m] = std::abs(f[i][m]);
    }
  std::vector<cplx> h = f[0];
  std::vector<double> ha = fa[0];
  for (int i = 1; i < d; ++i) {
    std::vector<cplx> nh(N + 1);
    std::vector<double> na(N + 1);
#pragma omp parallel for schedule(dynamic, 64) if (parallel) num_threads(thread_count())
    for (int M = 2; M <= N; ++M) {
      cplx acc = 0;
      double aa = 0;
      for (int m = 1; m < M; ++m) {
        acc += h[M - m] * f[i][m];
        aa += ha[M - m] * fa[i][m];
      }
      nh[M] = acc;
      na[M] = aa;
    }
    h = std::move(nh);
    ha = std::move(na);
  }
  double re = 0, im = 0, abs_sum = 0;
#pragma omp parallel for reduction(+ : re, im, abs_sum) schedule(static) if (parallel) num_threads(thread_count())
  for (int M = 1; M <= N; ++M) {
    cplx w = phase(colors[d] * M) * inv_pow(M, exps[d]);
    cplx v = h[M] * w;
    re += v.real();
    im += v.imag();
    abs_sum += ha[M] * std::abs(w);
  }
  double smax = 0;
  for (auto& s : exps) smax = std::max(smax, std::abs(s));
  double n_ops = d * static_cast<double>(N) + 8 * smax * std::log(N) + 16;
  double eps = std::numeric_limits<double>::epsilon();
  double roundoff = 4 * n_ops * eps / (1 - n_ops * eps) * abs_sum;
  return {{re, im}, mt_direct_tail(exps, N) + roundoff};
}

}  // namespace

Laurent power_series(cplx s, double alpha, int N, bool two_sided) {
  Laurent out(2 * N + 1);
  for (int m = 1; m <= N; ++m) {
    cplx v = inv_pow(m, s);
    out[N + m] = phase(alpha * m) * v;
    if (two_sided) {
      long si = std::lround(s.real());
      out[N - m] = phase(-alpha * m) * v * (si % 2 ? -1.0 : 1.0);
    }
  }
  return out;
}

cplx zero_frequency(const std::vector<Laurent>& factors, int N) {
  return zero_freq_impl(factors, N, true);
}

cplx zero_frequency_serial(const std::vector<Laurent>& factors, int N) {
  return zero_freq_impl(factors, N, false);
}

double mt_direct_tail(const std::vector<cplx>& exps, int N) {
  int d = static_cast<int>(exps.size()) - 1;
  double L = std::log(static_cast<double>(N));
  int q = d - 1;
  double total = 0;
  for (int i = 0; i < d; ++i) {
    double p = exps[i].real() + exps[d].real();
    double sig = exps[i].real();
    double acc = 0, fall = 1;
    for (int j = 0; j <= q; ++j) {
      if (j > 0) fall *= q - j + 1;
      acc += fall * std::pow(1 + L, q - j) / std::pow(p - 1, j + 1);
    }
    total += std::pow(d, sig) * std::exp(-(p - 1) * L) * acc;
  }
  return total;
}

DirectSum mt_direct(const std::vector<cplx>& exps, const std::vector<double>& colors, int N) {
  return mt_impl(exps, colors, N, true);
}

DirectSum mt_direct_serial(const std::vector<cplx>& exps, const std::vector<double>& colors, int N) {
  return mt_impl(exps, colors, N, false);
}

int thread_count() {
  if (const char* t = std::getenv("THREADS")) {
    int n = std::atoi(t);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
}

}  // namespace mtz::kernels
