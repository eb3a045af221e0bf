#include "mtz/cli.hpp"

#include "mtz/bern_products.hpp"
#include "mtz/dirichlet.hpp"
#include "mtz/errors.hpp"
#include "mtz/mzv_convert.hpp"
#include "mtz/numerics.hpp"
#include "mtz/partitions.hpp"
#include "mtz/reduction.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace mtz {

using nlohmann::json;

namespace {

double parse_double(std::string_view t, std::string_view whole) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw std::invalid_argument("malformed complex number '" + std::string(whole) + "'");
  return v;
}

EvalConfig config(const CommandRequest& req) {
  EvalConfig c;
  c.precision_bits = req.precision_bits;
  c.target_tol = std::max(std::ldexp(1.0, -static_cast<int>(req.precision_bits) + 16), 1e-300);
  c.direct_n = req.N;
  return c;
}

json complex_json(const Complex& v) {
  return {{"re", v.re.str(30)}, {"im", v.im.str(30)}};
}

json result_json(const EvalResult& r) {
  return {{"value_re", r.value.re.to_double()}, {"value_im", r.value.im.to_double()},
          {"value", complex_json(r.value)},     {"bound", r.bound},
          {"route", r.route}};
}

Rational alpha_of(const CommandRequest& req) { return req.alpha.value_or(Rational(0)); }

std::optional<DirichletCharacter> chi_of(const CommandRequest& req) {
  if (!req.chi) return std::nullopt;
  return character(req.chi->first, req.chi->second);
}

Identity reduced(const CommandRequest& req) {
  Identity id = theorem_identity(req.s, alpha_of(req));
  id.rhs = fold_zeta_zero(id.rhs);
  return id;
}

json cmd_reduce(const CommandRequest& req, std::ostringstream& text) {
  if (auto chi = chi_of(req)) {
    EvalConfig cfg = config(req);
    json fam = json::array();
    for (auto& wi : character_theorem_identity(req.s, *chi, cfg)) {
      wi.identity.rhs = fold_zeta_zero(wi.identity.rhs);
      fam.push_back({{"n", wi.n}, {"weight", complex_json(wi.weight)}, {"identity", to_json(wi.identity)}});
      text << "n=" << wi.n << "  weight=" << wi.weight.str(12) << "\n  lhs: " << wi.identity.lhs_expr()
           << "\n  rhs: " << wi.identity.rhs << "\n";
    }
    return {{"chi", {{"mod", chi->modulus}, {"index", chi->index}}}, {"family", fam}};
  }
  Identity id = reduced(req);
  text << "lhs: " << id.lhs_expr() << "\nrhs: " << id.rhs << "\n";
  return {{"identity", to_json(id)}};
}

json cmd_verify(const CommandRequest& req, std::ostringstream& text, int& code) {
  EvalConfig cfg = config(req);
  std::complex<double> z = *req.z;
  json out;
  double residual = 0, bound = 0;
  if (auto chi = chi_of(req)) {
    auto w = weighted_residual(character_theorem_identity(req.s, *chi, cfg), z, cfg);
    residual = w.residual.abs_bound();
    bound = w.bound;
    out["residual"] = complex_json(w.residual);
  } else {
    Identity id = reduced(req);
    EvalResult l = expr_eval(id.lhs_expr(), z, cfg);
    EvalResult r = expr_eval(id.rhs, z, cfg);
    residual = distance(l, r);
    bound = l.bound + r.bound;
    out["lhs"] = result_json(l);
    out["rhs"] = result_json(r);
  }
  bool pass = residual <= bound + req.tol;
  out["residual_abs"] = residual;
  out["bound"] = bound;
  out["tol"] = req.tol;
  out["pass"] = pass;
  text << (pass ? "PASS" : "FAIL") << "  residual " << residual << "  bound " << bound << "  tol " << req.tol
       << "\n";
  if (!pass) code = kVerifyFailed;
  return out;
}

json cmd_eval(const CommandRequest& req, std::ostringstream& text) {
  EvalConfig cfg = config(req);
  EvalResult r;
  if (auto chi = chi_of(req)) {
    std::vector<long> exps(req.s.begin(), req.s.end());
    if (req.z) {
      double re = req.z->real();
      if (req.z->imag() != 0 || re != std::round(re))
        throw DomainError("eval: a character twist needs an integer last exponent");
      exps.push_back(static_cast<long>(re));
    }
    auto one = character(1, 0);
    std::vector<DirichletCharacter> chis(exps.size() - 1, one);
    chis.push_back(*chi);
    r = l_mt_assemble(exps, chis, cfg);
  } else {
    std::vector<AffineExp> exps;
    for (int v : req.s) exps.push_back(iexp(v));
    if (req.z) exps.push_back(zexp());
    if (exps.size() < 2) throw DomainError("eval: needs at least two exponents (summed slots and the sum slot)");
    std::vector<Rational> colors(exps.size(), Rational(0));
    colors.back() = alpha_of(req);
    r = expr_eval(Expr(mt(exps, colors)), req.z.value_or(1.0), cfg);
  }
  text << r.value.str(30) << "  +- " << r.bound << "  [" << r.route << "]\n";
  return result_json(r);
}

json cmd_convert(const CommandRequest& req, std::ostringstream& text) {
  std::vector<long> exps(req.s.begin(), req.s.end());
  std::vector<Rational> colors(exps.size(), Rational(0));
  if (!colors.empty()) colors.back() = alpha_of(req);
  Expr e = mt_to_mzv_general(exps, colors);
  text << e << "\n";
  return {{"expr", to_json(e)}};
}

json cmd_bern(const CommandRequest& req, std::ostringstream& text) {
  std::span<const int> s(req.s);
  BernCombo b;
  if (req.method == "naive") b = naive_product(s);
  else if (req.method == "carlitz") {
    if (s.size() != 2) throw std::invalid_argument("bern-expand: carlitz takes exactly two entries");
    b = carlitz_expand(s[0], s[1]);
  } else if (req.method == "berprod") b = berprod_expand(s);
  else b = bernprodnice_expand(s);
  json terms = json::array();
  text << to_string(b.constant);
  for (auto& [m, c] : b.terms) {
    terms.push_back({{"degree", m}, {"coeff", to_string(c)}});
    text << " + (" << to_string(c) << ") B_" << m << "(x)";
  }
  text << "\n";
  return {{"method", req.method}, {"constant", to_string(b.constant)}, {"terms", terms}};
}

json cmd_partitions(const CommandRequest& req, std::ostringstream& text) {
  PartitionKind kind = req.kind == "fat" ? PartitionKind::Fat : PartitionKind::PreFat;
  auto parts = enumerate_partitions(std::span<const int>(req.s), kind);
  json list = json::array();
  for (auto& p : parts) {
    json one = json::array();
    for (int j = 0; j < p.num_parts(); ++j) {
      auto part = p.part(j);
      one.push_back(std::vector<int>(part.begin(), part.end()));
      text << (j ? " | " : "");
      for (std::size_t i = 0; i < part.size(); ++i) text << (i ? "," : "") << part[i];
    }
    text << "\n";
    list.push_back(one);
  }
  return {{"kind", req.kind}, {"count", parts.size()}, {"partitions", list}};
}

json cmd_characters(const CommandRequest& req, std::ostringstream& text) {
  auto gens = unit_generators(req.modulus);
  json list = json::array();
  text << "mod " << req.modulus << "; index digits over generators";
  for (std::size_t i = 0; i < gens.gens.size(); ++i) text << " " << gens.gens[i] << "^" << gens.orders[i];
  text << "\n";
  for (auto& chi : enumerate_characters(req.modulus)) {
    json vals = json::array();
    text << "#" << chi.index << " cond " << chi.conductor << (chi.primitive ? " primitive" : "") << " :";
    for (auto& v : chi.values) {
      vals.push_back(v ? json(to_string(*v)) : json(nullptr));
      text << " " << (v ? to_string(*v) : "-");
    }
    text << "\n";
    list.push_back({{"index", chi.index}, {"conductor", chi.conductor}, {"primitive", chi.primitive}, {"angles", vals}});
  }
  return {{"modulus", req.modulus},
          {"generators", gens.gens},
          {"orders", gens.orders},
          {"indexing", "index = sum_i d_i * prod_{j<i} order_j; chi(g_i) = e(d_i / order_i)"},
          {"characters", list}};
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string_view t = text;
  if (t.empty()) throw std::invalid_argument("empty complex number");
  if (t.back() != 'i') return {parse_double(t, text), 0.0};
  t.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = t.size(); i-- > 1;)
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  auto imag = [&](std::string_view u) {
    if (u.empty() || u == "+") return 1.0;
    if (u == "-") return -1.0;
    return parse_double(u.front() == '+' ? u.substr(1) : u, text);
  };
  if (split == std::string_view::npos) return {0.0, imag(t)};
  return {parse_double(t.substr(0, split), text), imag(t.substr(split))};
}

void validate(const CommandRequest& req) {
  static const std::vector<std::string> known{"reduce", "verify", "eval", "convert", "bern-expand", "partitions",
                                              "characters"};
  if (std::find(known.begin(), known.end(), req.subcommand) == known.end())
    throw std::invalid_argument("unknown subcommand '" + req.subcommand + "'");
  if (req.alpha && req.chi) throw std::invalid_argument("--alpha and --chi-mod/--chi-index are mutually exclusive");
  if (req.format != "json" && req.format != "text") throw std::invalid_argument("--format must be json or text");
  if (req.precision_bits < 53 || req.precision_bits > 4096)
    throw std::invalid_argument("--precision must lie in 53..4096");
  if (req.N < 3) throw std::invalid_argument("--N must be at least 3");
  if (req.subcommand == "characters") {
    if (req.modulus == 0) throw std::invalid_argument("characters needs --mod");
    return;
  }
  if (req.s.empty()) throw std::invalid_argument(req.subcommand + " needs --s");
  if (req.subcommand == "verify" && !req.z) throw std::invalid_argument("verify needs --z");
  if (req.subcommand == "partitions" && req.kind != "fat" && req.kind != "pre-fat")
    throw std::invalid_argument("--kind must be fat or pre-fat");
  if (req.subcommand == "bern-expand" && req.method != "naive" && req.method != "carlitz" &&
      req.method != "berprod" && req.method != "nice")
    throw std::invalid_argument("--method must be naive, carlitz, berprod or nice");
  if ((req.subcommand == "convert" || req.subcommand == "bern-expand" || req.subcommand == "partitions") && req.chi)
    throw std::invalid_argument(req.subcommand + " does not take a character");
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  try {
    validate(req);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  int code = kOk;
  std::ostringstream text;
  json body;
  try {
    const auto& c = req.subcommand;
    if (c == "reduce") body = cmd_reduce(req, text);
    else if (c == "verify") body = cmd_verify(req, text, code);
    else if (c == "eval") body = cmd_eval(req, text);
    else if (c == "convert") body = cmd_convert(req, text);
    else if (c == "bern-expand") body = cmd_bern(req, text);
    else if (c == "partitions") body = cmd_partitions(req, text);
    else body = cmd_characters(req, text);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (req.format == "text") {
    out << text.str();
  } else {
    json j = {{"schema", kCliSchema}, {"command", req.subcommand}};
    j.update(body);
    out << j.dump(2) << "\n";
  }
  return code;
}

}  // namespace mtz
