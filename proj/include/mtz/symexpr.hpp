#pragma once

// Rational-linear combinations of products of zeta-type atoms, with at most
// one symbolic variable z entering exponents affinely.

#include "mtz/exact.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtz {

/// a + b z with b in {0, 1}.
struct AffineExp {
  long a = 0;
  int b = 0;

  bool has_z() const { return b != 0; }
  auto operator<=>(const AffineExp&) const = default;
  std::string str() const;
  static AffineExp parse(const std::string& text);
};

inline AffineExp zexp(long a = 0) { return {a, 1}; }
inline AffineExp iexp(long a) { return {a, 0}; }

enum class AtomKind { EvenZeta, TildeZeta, Lerch, MZV, MT };

/// EvenZeta/TildeZeta use `arg`. Lerch uses exps[0], colors[0]. MT stores the
/// k summed slots followed by the sum slot. MZV stores the entries in the
/// usual order, m_1 > m_2 > ... > m_k. Colors are angles in [0, 1), meaning e(c).
struct Atom {
  AtomKind kind = AtomKind::EvenZeta;
  long arg = 0;
  std::vector<AffineExp> exps;
  std::vector<Rational> colors;

  bool has_z() const;
  long weight_const() const;  // sum of integer parts of exponents, or arg
  bool operator==(const Atom&) const = default;
};

bool operator<(const Atom& x, const Atom& y);

Atom even_zeta(long two_r);
Atom tilde_zeta(long m);
Atom lerch(AffineExp e, const Rational& color);
Atom mzv(std::vector<AffineExp> exps, std::vector<Rational> colors);
Atom mt(std::vector<AffineExp> exps, std::vector<Rational> colors);
Atom mt(const std::vector<long>& exps);

/// Canonical form of one atom, or nullopt when it is identically zero.
std::optional<Atom> canonical(const Atom& a);

std::string to_string(const Atom& a);

class Expr {
 public:
  using Key = std::vector<Atom>;

  Expr() = default;
  explicit Expr(const Rational& c);
  explicit Expr(const Atom& a, const Rational& c = 1);

  /// Adds c * prod(atoms) after canonicalizing every atom.
  void add_term(const Rational& c, std::vector<Atom> atoms);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  bool operator==(const Expr& o) const { return terms_ == o.terms_; }

 private:
  std::map<Key, Rational> terms_;
};

Expr normalize(const Expr& e);
/// Replaces every EvenZeta(0) factor by its value -1/2.
Expr fold_zeta_zero(const Expr& e);
Expr add(const Expr& a, const Expr& b);
Expr scale(const Rational& c, const Expr& e);
Expr multiply(const Expr& a, const Expr& b);
inline Expr operator+(const Expr& a, const Expr& b) { return add(a, b); }
inline Expr operator-(const Expr& a, const Expr& b) { return add(a, scale(-1, b)); }
inline Expr operator*(const Expr& a, const Expr& b) { return multiply(a, b); }
inline Expr operator*(const Rational& c, const Expr& e) { return scale(c, e); }

std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& os, const Expr& e);
std::ostream& operator<<(std::ostream& os, const Atom& a);

inline constexpr const char* kExprSchema = "mtz.expr/1";

nlohmann::json to_json(const Atom& a);
Atom atom_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Expr& e);
Expr expr_from_json(const nlohmann::json& j);

// ---- after substituting a numeric value for z ----

enum class NumKind { EvenZeta, Zeta, Lerch, MZV, MT };

/// Zeta carries an odd integer argument; EvenZeta an even one (including 0).
struct NumAtom {
  NumKind kind = NumKind::EvenZeta;
  long arg = 0;
  std::vector<std::complex<double>> exps;
  std::vector<Rational> colors;

  bool integral() const;  // every exponent is an integer
  bool operator==(const NumAtom&) const = default;
};

bool operator<(const NumAtom& x, const NumAtom& y);
std::string to_string(const NumAtom& a);

struct NumExpr {
  std::map<std::vector<NumAtom>, Rational> terms;

  void add_term(const Rational& c, std::vector<NumAtom> atoms);
  bool operator==(const NumExpr&) const = default;
};

NumAtom substitute_z(const Atom& a, std::complex<double> z0);
/// Throws DomainError when Re(z0) < 1.
NumExpr substitute_z(const Expr& e, std::complex<double> z0);
NumExpr multiply(const NumExpr& a, const NumExpr& b);

}  // namespace mtz
