#pragma once

// Dirichlet characters mod f <= 50 with exact rational angles, Gauss sums,
// and character-twisted MT values assembled from colored ones.

#include "mtz/numerics.hpp"
#include "mtz/reduction.hpp"

#include <optional>
#include <vector>

namespace mtz {

struct DirichletCharacter {
  long modulus = 1;
  /// Position in enumerate_characters(modulus). The index is read in mixed
  /// radix over the unit-group generators, first generator least significant.
  long index = 0;
  /// values[a] = e(angle) for gcd(a, f) = 1, nullopt otherwise.
  std::vector<std::optional<Rational>> values;
  long conductor = 1;
  bool primitive = true;

  bool vanishes(long a) const { return !values[mod(a)]; }
  /// Angle of chi(a); throws std::logic_error when chi(a) = 0.
  const Rational& angle(long a) const;
  DirichletCharacter conj() const;
  bool principal() const;

 private:
  long mod(long a) const { return ((a % modulus) + modulus) % modulus; }
};

/// Generators of (Z/f)^* with their orders, as used for the index.
struct UnitGenerators {
  std::vector<long> gens;
  std::vector<long> orders;
};
UnitGenerators unit_generators(long f);

/// All phi(f) characters mod f, ordered by index. Needs 1 <= f <= 50.
std::vector<DirichletCharacter> enumerate_characters(long f);
DirichletCharacter character(long f, long index);

/// tau(chi) = sum_{n=1}^{f} chi(n) e(n/f).
EvalResult gauss_sum(const DirichletCharacter& chi, const EvalConfig& cfg);

/// L_MT(s; chi_1, ..., chi_{k+1}): every chi_i(m) is expanded as
/// sum_j conj(chi_i)(j) e(jm/f_i) / tau(conj chi_i) and the colored values are
/// summed. The grid prod f_i may not exceed `budget`.
EvalResult l_mt_assemble(const std::vector<long>& exps, const std::vector<DirichletCharacter>& chis,
                         const EvalConfig& cfg, long budget = 20000);

struct WeightedIdentity {
  long n;
  Complex weight;  // conj(chi)(n) / tau(conj chi)
  Identity identity;
};

/// The identities at alpha = n/f, n = 1..f with chi(n) != 0, and their weights.
std::vector<WeightedIdentity> character_theorem_identity(const std::vector<int>& s, const DirichletCharacter& chi,
                                                         const EvalConfig& cfg = {});

struct WeightedResidual {
  Complex residual;
  double bound;
  double max_atom_bound;  // largest bound reported on one side of one identity
};
/// sum_n w_n (lhs_n - rhs_n) at z = z0, with bound sum_n |w_n| (bound of both sides).
WeightedResidual weighted_residual(const std::vector<WeightedIdentity>& family, std::complex<double> z0,
                                   const EvalConfig& cfg);

}  // namespace mtz
