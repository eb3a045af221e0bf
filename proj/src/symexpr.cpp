#include "mtz/symexpr.hpp"

#include "mtz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mtz {

std::string AffineExp::str() const {
  if (!b) return std::to_string(a);
  if (a == 0) return "z";
  return a > 0 ? "z+" + std::to_string(a) : "z" + std::to_string(a);
}

AffineExp AffineExp::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty exponent");
  AffineExp e;
  auto zpos = t.find('z');
  if (zpos == std::string::npos) {
    e.a = std::stol(t);
    if (std::to_string(e.a) != t && "+" + std::to_string(e.a) != t)
      throw std::invalid_argument("malformed exponent: " + text);
    return e;
  }
  e.b = 1;
  std::string rest = t.substr(0, zpos) + t.substr(zpos + 1);
  if (!(zpos == 0 || (zpos == 1 && t[0] == '+')))
    throw std::invalid_argument("malformed exponent: " + text);
  if (zpos == 1) rest = rest.substr(1);
  if (rest.empty()) return e;
  e.a = std::stol(rest);
  return e;
}

namespace {

int kind_rank(AtomKind k) { return static_cast<int>(k); }

template <class T>
int cmp(const T& x, const T& y) {
  return x < y ? -1 : (y < x ? 1 : 0);
}

int cmp_vec(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = cmp(x[i], y[i])) return c;
  return cmp(x.size(), y.size());
}

}  // namespace

bool Atom::has_z() const {
  return std::any_of(exps.begin(), exps.end(), [](const AffineExp& e) { return e.has_z(); });
}

long Atom::weight_const() const {
  if (kind == AtomKind::EvenZeta || kind == AtomKind::TildeZeta) return arg;
  long w = 0;
  for (auto& e : exps) w += e.a;
  return w;
}

bool operator<(const Atom& x, const Atom& y) {
  if (int c = cmp(kind_rank(x.kind), kind_rank(y.kind))) return c < 0;
  if (int c = cmp(x.arg, y.arg)) return c < 0;
  if (int c = cmp(x.exps, y.exps)) return c < 0;
  return cmp_vec(x.colors, y.colors) < 0;
}

Atom even_zeta(long two_r) {
  if (two_r < 0 || two_r % 2) throw std::invalid_argument("even_zeta: argument must be even and >= 0");
  return {AtomKind::EvenZeta, two_r, {}, {}};
}

Atom tilde_zeta(long m) {
  if (m < 0) throw std::invalid_argument("tilde_zeta: negative argument");
  return {AtomKind::TildeZeta, m, {}, {}};
}

Atom lerch(AffineExp e, const Rational& color) {
  return {AtomKind::Lerch, 0, {e}, {frac_part(color)}};
}

Atom mzv(std::vector<AffineExp> exps, std::vector<Rational> colors) {
  if (exps.empty() || exps.size() != colors.size())
    throw std::invalid_argument("mzv: exponent/color length mismatch");
  for (auto& c : colors) c = frac_part(c);
  return {AtomKind::MZV, 0, std::move(exps), std::move(colors)};
}

Atom mt(std::vector<AffineExp> exps, std::vector<Rational> colors) {
  if (exps.size() < 2 || exps.size() != colors.size())
    throw std::invalid_argument("mt: exponent/color length mismatch");
  for (auto& c : colors) c = frac_part(c);
  return {AtomKind::MT, 0, std::move(exps), std::move(colors)};
}

Atom mt(const std::vector<long>& exps) {
  std::vector<AffineExp> e;
  for (long v : exps) e.push_back(iexp(v));
  return mt(std::move(e), std::vector<Rational>(exps.size(), Rational(0)));
}

std::optional<Atom> canonical(const Atom& a) {
  int zcount = 0;
  for (auto& e : a.exps) zcount += e.has_z();
  if (zcount > 1) throw std::logic_error("atom with two z-bearing exponents");
  switch (a.kind) {
    case AtomKind::EvenZeta:
      return even_zeta(a.arg);
    case AtomKind::TildeZeta:
      if (a.arg % 2) return std::nullopt;
      return even_zeta(a.arg);
    case AtomKind::Lerch: {
      Atom l = lerch(a.exps.at(0), a.colors.at(0));
      const auto& e = l.exps[0];
      if (!e.has_z() && l.colors[0] == 0 && e.a >= 2 && e.a % 2 == 0) return even_zeta(e.a);
      return l;
    }
    case AtomKind::MZV:
      return mzv(a.exps, a.colors);
    case AtomKind::MT: {
      Atom m = mt(a.exps, a.colors);
      std::size_t k = m.exps.size() - 1;
      if (k == 1) {
        AffineExp e{m.exps[0].a + m.exps[1].a, m.exps[0].b + m.exps[1].b};
        return canonical(lerch(e, m.colors[0] + m.colors[1]));
      }
      std::vector<std::pair<AffineExp, Rational>> slots;
      for (std::size_t i = 0; i < k; ++i) slots.emplace_back(m.exps[i], m.colors[i]);
      std::sort(slots.begin(), slots.end());
      for (std::size_t i = 0; i < k; ++i) {
        m.exps[i] = slots[i].first;
        m.colors[i] = slots[i].second;
      }
      return m;
    }
  }
  return std::nullopt;
}

std::string to_string(const Atom& a) {
  std::ostringstream os;
  auto list = [&](const char* name) {
    os << name << "(";
    for (std::size_t i = 0; i < a.exps.size(); ++i) os << (i ? "," : "") << a.exps[i].str();
    bool colored = std::any_of(a.colors.begin(), a.colors.end(), [](auto& c) { return c != 0; });
    if (colored) {
      os << ";";
      for (std::size_t i = 0; i < a.colors.size(); ++i) os << (i ? "," : "") << mtz::to_string(a.colors[i]);
    }
    os << ")";
  };
  switch (a.kind) {
    case AtomKind::EvenZeta: os << "zeta(" << a.arg << ")"; break;
    case AtomKind::TildeZeta: os << "tzeta(" << a.arg << ")"; break;
    case AtomKind::Lerch: list("phi"); break;
    case AtomKind::MZV: list("zeta"); break;
    case AtomKind::MT: list("zetaMT"); break;
  }
  return os.str();
}

Expr::Expr(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

Expr::Expr(const Atom& a, const Rational& c) { add_term(c, {a}); }

void Expr::add_term(const Rational& c, std::vector<Atom> atoms) {
  if (c == 0) return;
  Key key;
  key.reserve(atoms.size());
  int zcount = 0;
  for (auto& a : atoms) {
    auto ca = canonical(a);
    if (!ca) return;
    zcount += ca->has_z();
    key.push_back(std::move(*ca));
  }
  if (zcount > 1) throw std::logic_error("term with two z-bearing atoms");
  std::sort(key.begin(), key.end());
  auto [it, fresh] = terms_.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Expr& Expr::operator+=(const Expr& o) {
  for (auto& [k, c] : o.terms_) add_term(c, k);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  for (auto& [k, c] : o.terms_) add_term(-c, k);
  return *this;
}

Expr normalize(const Expr& e) {
  Expr out;
  for (auto& [k, c] : e.terms()) out.add_term(c, k);
  return out;
}

Expr fold_zeta_zero(const Expr& e) {
  Expr out;
  for (auto& [k, c] : e.terms()) {
    Rational coeff = c;
    std::vector<Atom> rest;
    for (auto& a : k) {
      if (a.kind == AtomKind::EvenZeta && a.arg == 0)
        coeff *= Rational(-1, 2);
      else
        rest.push_back(a);
    }
    out.add_term(coeff, std::move(rest));
  }
  return out;
}

Expr add(const Expr& a, const Expr& b) {
  Expr out = a;
  out += b;
  return out;
}

Expr scale(const Rational& c, const Expr& e) {
  Expr out;
  if (c == 0) return out;
  for (auto& [k, v] : e.terms()) out.add_term(c * v, k);
  return out;
}

Expr multiply(const Expr& a, const Expr& b) {
  Expr out;
  for (auto& [ka, ca] : a.terms())
    for (auto& [kb, cb] : b.terms()) {
      std::vector<Atom> atoms = ka;
      atoms.insert(atoms.end(), kb.begin(), kb.end());
      out.add_term(ca * cb, std::move(atoms));
    }
  return out;
}

std::string to_string(const Expr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : e.terms()) {
    std::string cs = mtz::to_string(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
    if (k.empty() || mag != "1") os << mag << (k.empty() ? "" : "*");
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "*" : "") << to_string(k[i]);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }
std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << to_string(a); }

// ---- JSON ----

namespace {

const char* kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::EvenZeta: return "even_zeta";
    case AtomKind::TildeZeta: return "tilde_zeta";
    case AtomKind::Lerch: return "lerch";
    case AtomKind::MZV: return "mzv";
    case AtomKind::MT: return "mt";
  }
  return "";
}

}  // namespace

nlohmann::json to_json(const Atom& a) {
  nlohmann::json j;
  j["kind"] = kind_name(a.kind);
  if (a.kind == AtomKind::EvenZeta || a.kind == AtomKind::TildeZeta) {
    j["arg"] = a.arg;
  } else if (a.kind == AtomKind::Lerch) {
    j["exp"] = a.exps[0].str();
    j["color"] = mtz::to_string(a.colors[0]);
  } else {
    auto& ex = j["exps"] = nlohmann::json::array();
    auto& co = j["colors"] = nlohmann::json::array();
    for (auto& e : a.exps) ex.push_back(e.str());
    for (auto& c : a.colors) co.push_back(mtz::to_string(c));
  }
  return j;
}

Atom atom_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "even_zeta") return even_zeta(j.at("arg").get<long>());
  if (kind == "tilde_zeta") return tilde_zeta(j.at("arg").get<long>());
  if (kind == "lerch")
    return lerch(AffineExp::parse(j.at("exp").get<std::string>()),
                 parse_rational(j.at("color").get<std::string>()));
  std::vector<AffineExp> exps;
  std::vector<Rational> colors;
  for (auto& e : j.at("exps")) exps.push_back(AffineExp::parse(e.get<std::string>()));
  for (auto& c : j.at("colors")) colors.push_back(parse_rational(c.get<std::string>()));
  if (kind == "mzv") return mzv(std::move(exps), std::move(colors));
  if (kind == "mt") return mt(std::move(exps), std::move(colors));
  throw std::invalid_argument("unknown atom kind: " + kind);
}

nlohmann::json to_json(const Expr& e) {
  nlohmann::json j;
  j["schema"] = kExprSchema;
  auto& terms = j["terms"] = nlohmann::json::array();
  for (auto& [k, c] : e.terms()) {
    nlohmann::json t;
    t["coeff"] = mtz::to_string(c);
    auto& atoms = t["atoms"] = nlohmann::json::array();
    for (auto& a : k) atoms.push_back(to_json(a));
    terms.push_back(std::move(t));
  }
  return j;
}

Expr expr_from_json(const nlohmann::json& j) {
  if (j.contains("schema") && j["schema"] != kExprSchema)
    throw std::invalid_argument("unsupported expression schema");
  Expr e;
  for (auto& t : j.at("terms")) {
    std::vector<Atom> atoms;
    for (auto& a : t.at("atoms")) atoms.push_back(atom_from_json(a));
    e.add_term(parse_rational(t.at("coeff").get<std::string>()), std::move(atoms));
  }
  return e;
}

// ---- numeric substitution ----

namespace {

bool is_integer(std::complex<double> v) {
  return v.imag() == 0 && std::floor(v.real()) == v.real();
}

int cmp_c(std::complex<double> x, std::complex<double> y) {
  if (int c = cmp(x.real(), y.real())) return c;
  return cmp(x.imag(), y.imag());
}

}  // namespace

bool NumAtom::integral() const {
  return std::all_of(exps.begin(), exps.end(), is_integer);
}

bool operator<(const NumAtom& x, const NumAtom& y) {
  if (int c = cmp(static_cast<int>(x.kind), static_cast<int>(y.kind))) return c < 0;
  if (int c = cmp(x.arg, y.arg)) return c < 0;
  std::size_t n = std::min(x.exps.size(), y.exps.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = cmp_c(x.exps[i], y.exps[i])) return c < 0;
  if (int c = cmp(x.exps.size(), y.exps.size())) return c < 0;
  return cmp_vec(x.colors, y.colors) < 0;
}

std::string to_string(const NumAtom& a) {
  std::ostringstream os;
  auto num = [&](std::complex<double> v) {
    os << v.real();
    if (v.imag() != 0) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
  };
  switch (a.kind) {
    case NumKind::EvenZeta: os << "zeta(" << a.arg << ")"; return os.str();
    case NumKind::Zeta: os << "zeta(" << a.arg << ")"; return os.str();
    case NumKind::Lerch: os << "phi("; break;
    case NumKind::MZV: os << "zeta("; break;
    case NumKind::MT: os << "zetaMT("; break;
  }
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (i) os << ",";
    num(a.exps[i]);
  }
  os << ";";
  for (std::size_t i = 0; i < a.colors.size(); ++i) os << (i ? "," : "") << mtz::to_string(a.colors[i]);
  os << ")";
  return os.str();
}

void NumExpr::add_term(const Rational& c, std::vector<NumAtom> atoms) {
  if (c == 0) return;
  std::sort(atoms.begin(), atoms.end());
  auto [it, fresh] = terms.try_emplace(std::move(atoms), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

NumAtom substitute_z(const Atom& a, std::complex<double> z0) {
  auto val = [&](const AffineExp& e) {
    return std::complex<double>(static_cast<double>(e.a)) + (e.b ? z0 : 0.0);
  };
  NumAtom n;
  switch (a.kind) {
    case AtomKind::EvenZeta:
    case AtomKind::TildeZeta:
      if (a.arg % 2) throw std::logic_error("odd tilde zeta should have been dropped");
      n.kind = NumKind::EvenZeta;
      n.arg = a.arg;
      return n;
    case AtomKind::Lerch: {
      auto v = val(a.exps[0]);
      if (a.colors[0] == 0 && is_integer(v)) {
        long m = static_cast<long>(v.real());
        n.kind = m % 2 == 0 ? NumKind::EvenZeta : NumKind::Zeta;
        n.arg = m;
        return n;
      }
      n.kind = NumKind::Lerch;
      n.exps = {v};
      n.colors = a.colors;
      return n;
    }
    case AtomKind::MZV:
    case AtomKind::MT: {
      n.kind = a.kind == AtomKind::MZV ? NumKind::MZV : NumKind::MT;
      for (auto& e : a.exps) n.exps.push_back(val(e));
      n.colors = a.colors;
      if (n.kind == NumKind::MT) {
        std::size_t k = n.exps.size() - 1;
        std::vector<std::size_t> ord(k);
        for (std::size_t i = 0; i < k; ++i) ord[i] = i;
        std::sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) {
          if (int c = cmp_c(n.exps[x], n.exps[y])) return c < 0;
          return n.colors[x] < n.colors[y];
        });
        NumAtom s = n;
        for (std::size_t i = 0; i < k; ++i) {
          s.exps[i] = n.exps[ord[i]];
          s.colors[i] = n.colors[ord[i]];
        }
        return s;
      }
      return n;
    }
  }
  return n;
}

NumExpr substitute_z(const Expr& e, std::complex<double> z0) {
  if (!(z0.real() >= 1)) throw DomainError("substitute_z: Re(z) must be >= 1");
  NumExpr out;
  for (auto& [k, c] : e.terms()) {
    std::vector<NumAtom> atoms;
    for (auto& a : k) atoms.push_back(substitute_z(a, z0));
    out.add_term(c, std::move(atoms));
  }
  return out;
}

NumExpr multiply(const NumExpr& a, const NumExpr& b) {
  NumExpr out;
  for (auto& [ka, ca] : a.terms)
    for (auto& [kb, cb] : b.terms) {
      auto atoms = ka;
      atoms.insert(atoms.end(), kb.begin(), kb.end());
      out.add_term(ca * cb, std::move(atoms));
    }
  return out;
}

}  // namespace mtz
