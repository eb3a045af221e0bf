#include "mtz/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  mtz::CommandRequest req;
  std::string alpha, z;
  long chi_mod = 0, chi_index = -1;

  CLI::App app{"Mordell-Tornheim zeta reductions, conversions and evaluation"};
  app.require_subcommand(1);
  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--s", req.s, "exponent vector, comma separated")->delimiter(',');
    sub->add_option("--alpha", alpha, "color p/q");
    sub->add_option("--chi-mod", chi_mod, "character modulus");
    sub->add_option("--chi-index", chi_index, "character index (see `characters`)");
    sub->add_option("--z", z, "complex z as a+bi");
    sub->add_option("--precision", req.precision_bits, "working precision in bits");
    sub->add_option("--N", req.N, "truncation of the direct summation route");
    sub->add_option("--tol", req.tol, "verification slack");
    sub->add_option("--format", req.format, "json or text");
    return sub;
  };
  add("reduce", "the reduction identity for s and alpha");
  add("verify", "evaluate both sides of the identity at z");
  add("eval", "value of zeta_MT(s; alpha), with z appended as the last exponent when given");
  add("convert", "rewrite zeta_MT(s) as multiple zeta values");
  add("bern-expand", "product of Bernoulli polynomials as a combination of single ones")
      ->add_option("--method", req.method, "naive, carlitz, berprod or nice");
  add("partitions", "pre-fat or fat ordered partitions of s")->add_option("--kind", req.kind, "fat or pre-fat");
  add("characters", "Dirichlet characters modulo f")->add_option("--mod", req.modulus, "modulus f")->required();

  try {
    app.parse(argc, argv);
    req.subcommand = app.get_subcommands().front()->get_name();
    if (!alpha.empty()) req.alpha = mtz::parse_rational(alpha);
    if (!z.empty()) req.z = mtz::parse_complex(z);
    if (chi_mod || chi_index >= 0) {
      if (!chi_mod || chi_index < 0) throw std::invalid_argument("--chi-mod and --chi-index go together");
      req.chi = std::make_pair(chi_mod, chi_index);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return mtz::kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return mtz::kUsage;
  }
  int code = mtz::run(req, std::cout, std::cerr);
  if (code == mtz::kUsage) std::cerr << app.help();
  return code;
}
