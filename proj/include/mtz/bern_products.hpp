#pragma once

// Products of Bernoulli polynomials rewritten as a constant plus a rational
// combination of single Bernoulli polynomials B_m(x).

#include "mtz/exact.hpp"

#include <map>
#include <span>
#include <vector>

namespace mtz {

struct BernCombo {
  std::map<int, Rational> terms;  // degree m -> coefficient of B_m(x), m >= 1
  Rational constant;

  void add(int degree, const Rational& c);
  bool operator==(const BernCombo&) const = default;
};

BernCombo naive_product(std::span<const int> s);
BernCombo carlitz_expand(int s1, int s2);
BernCombo berprod_expand(std::span<const int> s);
BernCombo bernprodnice_expand(std::span<const int> s);

/// One summand of the partition expansion before collection. `bern_weight` is
/// the sum of the indices of the Bernoulli numbers in its coefficient;
/// `degree` is -1 for the constant part.
struct ProvenanceTerm {
  int degree;
  Rational coeff;
  int bern_weight;
};
std::vector<ProvenanceTerm> bernprodnice_terms(std::span<const int> s);

}  // namespace mtz
