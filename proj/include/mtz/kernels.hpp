#pragma once

// Double-precision summation kernels. Each parallel kernel has a serial twin
// computing the same quantity by a plainer loop; tests and bench/ compare them.

#include <complex>
#include <vector>

namespace mtz::kernels {

using cplx = std::complex<double>;

/// A trigonometric polynomial sum_{f=-N}^{N} c_f e(f x), stored at index f + N.
using Laurent = std::vector<cplx>;

/// Constant term (the integral over [0,1]) of the product of the factors.
cplx zero_frequency(const std::vector<Laurent>& factors, int N);
cplx zero_frequency_serial(const std::vector<Laurent>& factors, int N);

/// sum_{m=1}^{N} w(m) e(m x) / m^s as a Laurent polynomial; with `two_sided`
/// the negative frequencies m = -1..-N are added with sign(m)^s (s integer).
Laurent power_series(cplx s, double alpha, int N, bool two_sided);

struct DirectSum {
  cplx value;
  double bound;  // tail majorant plus a roundoff estimate
};

/// Colored MT sum over the simplex m_1 + ... + m_d <= N, depth d <= 3.
/// exps and colors hold d + 1 entries (summed slots, then the sum slot).
DirectSum mt_direct(const std::vector<cplx>& exps, const std::vector<double>& colors, int N);
DirectSum mt_direct_serial(const std::vector<cplx>& exps, const std::vector<double>& colors, int N);

/// Tail majorant of the simplex truncation at N.
double mt_direct_tail(const std::vector<cplx>& exps, int N);

/// Number of OpenMP threads the kernels use (honors THREADS when set).
int thread_count();

}  // namespace mtz::kernels
