#include "mtz/cli.hpp"
#include "mtz/reduction.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <sstream>

using namespace mtz;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
  json body() const { return json::parse(out); }
};

Outcome call(CommandRequest req) {
  std::ostringstream out, err;
  int code = run(req, out, err);
  return {code, out.str(), err.str()};
}

CommandRequest request(std::string sub, std::vector<int> s) {
  CommandRequest r;
  r.subcommand = std::move(sub);
  r.s = std::move(s);
  return r;
}

}  // namespace

TEST(Cli, ParseComplex) {
  EXPECT_EQ(parse_complex("2"), std::complex<double>(2, 0));
  EXPECT_EQ(parse_complex("2+1i"), std::complex<double>(2, 1));
  EXPECT_EQ(parse_complex("1.5-0.25i"), std::complex<double>(1.5, -0.25));
  EXPECT_EQ(parse_complex("1e-3+2e+1i"), std::complex<double>(1e-3, 20));
  EXPECT_EQ(parse_complex("-i"), std::complex<double>(0, -1));
  EXPECT_EQ(parse_complex("3i"), std::complex<double>(0, 3));
  EXPECT_THROW(parse_complex("2+x"), std::invalid_argument);
  EXPECT_THROW(parse_complex(""), std::invalid_argument);
}

TEST(Cli, ReduceWorkedExample) {
  auto r = request("reduce", {1, 1});
  r.alpha = Rational(0);
  auto o = call(r);
  ASSERT_EQ(o.code, kOk) << o.err;
  Identity id = identity_from_json(o.body().at("identity"));
  Expr expected;
  expected.add_term(-2, {lerch(zexp(2), 0)});
  EXPECT_EQ(id.rhs, expected);
}

TEST(Cli, VerifyPasses) {
  auto r = request("verify", {2, 3});
  r.alpha = Rational(0);
  r.z = 2.0;
  r.tol = 1e-8;
  auto o = call(r);
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_TRUE(o.body().at("pass").get<bool>());
  EXPECT_LE(o.body().at("residual_abs").get<double>(), o.body().at("bound").get<double>() + 1e-8);
}

TEST(Cli, PartitionsFat) {
  auto r = request("partitions", {1, 1, 1, 1});
  r.kind = "fat";
  auto o = call(r);
  ASSERT_EQ(o.code, kOk);
  EXPECT_EQ(o.body().at("count"), 2);
}

TEST(Cli, EvalAndCharacters) {
  auto o = call(request("eval", {2, 2, 2}));
  ASSERT_EQ(o.code, kOk) << o.err;
  auto b = o.body();
  for (auto key : {"value_re", "value_im", "bound", "route"}) EXPECT_TRUE(b.contains(key)) << key;
  EXPECT_NEAR(b.at("value_re").get<double>(), 0.3391143539948164, 1e-15);

  CommandRequest c;
  c.subcommand = "characters";
  c.modulus = 12;
  auto oc = call(c);
  ASSERT_EQ(oc.code, kOk);
  EXPECT_EQ(oc.body().at("characters").size(), 4u);
}

TEST(Cli, ExitCodes) {
  auto bad = request("reduce", {1, 1});
  bad.alpha = Rational(0);
  bad.chi = std::make_pair(3L, 1L);
  auto o = call(bad);
  EXPECT_EQ(o.code, kUsage);
  EXPECT_FALSE(o.err.empty());
  EXPECT_TRUE(o.out.empty());

  EXPECT_EQ(call(request("nonsense", {1})).code, kUsage);
  EXPECT_EQ(call(request("verify", {1, 1})).code, kUsage);  // no z

  auto low = request("verify", {1, 1});
  low.z = 0.5;
  EXPECT_EQ(call(low).code, kDomain);

  auto nonprim = request("reduce", {2, 2});
  nonprim.chi = std::make_pair(6L, 0L);
  EXPECT_EQ(call(nonprim).code, kDomain);

  auto divergent = request("eval", {1, 0});
  EXPECT_EQ(call(divergent).code, kDomain);

  // an impossible tolerance makes the check fail
  auto strict = request("verify", {1, 2});
  strict.z = 2.0;
  strict.tol = -1;
  EXPECT_EQ(call(strict).code, kVerifyFailed);
}

TEST(Cli, DeterministicAndRoundTrips) {
  for (auto s : std::vector<std::vector<int>>{{1, 1}, {2, 1, 1}, {1, 2, 3}}) {
    auto r = request("reduce", s);
    r.alpha = Rational(1, 3);
    auto a = call(r), b = call(r);
    ASSERT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
    auto j = a.body().at("identity");
    EXPECT_EQ(to_json(identity_from_json(j)), j);
  }
  auto conv = request("convert", {2, 2, 2, 2});
  auto o = call(conv);
  ASSERT_EQ(o.code, kOk);
  auto e = o.body().at("expr");
  EXPECT_EQ(to_json(expr_from_json(e)), e);
}
