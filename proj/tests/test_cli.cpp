#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace aluffi {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "aluffi");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ALUFFI_TEST_DATA_DIR) + "/" + name; }

bool has(const std::string& haystack, const std::string& needle) { return haystack.find(needle) != std::string::npos; }

TEST(Cli, PointsIdealFourPoints) {
  const auto r = run({"points-ideal", data("four_points_p2.txt")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "J = (x0*x1 - x1*x2, x0*x2 - x1*x2)")) << r.out;
  EXPECT_TRUE(has(r.out, "mu = 2"));
}

TEST(Cli, PointsIdealIgpSixPoints) {
  const auto r = run({"points-ideal", "--igp", data("six_points_p3.txt")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "x0*x1 - 5*x1*x3 + 4*x2*x3")) << r.out;
  EXPECT_TRUE(has(r.out, "x0*x3 - 4*x1*x3 + 3*x2*x3"));
  EXPECT_TRUE(has(r.out, "alpha[0,1] = t1:-5 t2:4"));
  EXPECT_TRUE(has(r.out, "mu = 4"));
}

TEST(Cli, PointsIdealSinglePoint) {
  const auto r = run({"--json", "points-ideal", data("one_point_p2.txt")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("mu"), 2);
  EXPECT_EQ(doc.at("generators").size(), 2u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"points-ideal", data("malformed.txt")}).code, cli::kParseError);
  EXPECT_EQ(run({"gb", data("bad_ideal.txt")}).code, cli::kParseError);
  EXPECT_EQ(run({"points-ideal", data("missing.txt")}).code, cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);
  EXPECT_EQ(run({"points-ideal", "--igp", data("collinear_p2.txt")}).code, cli::kGlpViolation);
  EXPECT_EQ(run({"--r", "5", "critical", data("four_points_p2.txt")}).code, cli::kFailure);
  EXPECT_EQ(run({"--degree-cap", "2", "vv-check", data("four_points_p2.txt")}).code, cli::kFailure);
}

TEST(Cli, VvCheckVerdicts) {
  const auto two = run({"vv-check", data("two_points_p3.txt")});
  EXPECT_EQ(two.code, cli::kTorsionOrMismatch);
  EXPECT_TRUE(has(two.out, "verdict: torsion-at-2")) << two.out;

  const auto four = run({"--json", "vv-check", data("four_points_p2.txt")});
  EXPECT_EQ(four.code, cli::kTorsionOrMismatch);
  const auto doc = nlohmann::json::parse(four.out);
  EXPECT_EQ(doc.at("verdict"), "torsion-at-2");
  EXPECT_TRUE(doc.at("degrees")[0].contains("witness"));

  const auto five = run({"vv-check", data("five_points_p3.txt")});
  EXPECT_EQ(five.code, cli::kOk);
  EXPECT_TRUE(has(five.out, "fast path (I = (J, m^r)): yes"));
  EXPECT_TRUE(has(five.out, "verdict: torsion-free"));
}

TEST(Cli, VvCheckOnIdealFile) {
  const auto r = run({"--t-max", "2", "vv-check", data("four_points_ideal.txt")});
  EXPECT_EQ(r.code, cli::kTorsionOrMismatch);
}

TEST(Cli, HilbertMuGbCritical) {
  const auto h = run({"hilbert", "--max-degree", "4", data("hyperplane_p3.txt")});
  EXPECT_EQ(h.code, cli::kOk);
  EXPECT_EQ(h.out, "1, 4, 5, 5, 5\n");

  const auto mu = run({"mu", "--target", "critical", data("six_points_p3.txt")});
  EXPECT_EQ(mu.code, cli::kOk);
  EXPECT_TRUE(has(mu.out, "mu = 16")) << mu.out;

  const auto gb = run({"gb", data("principal.txt")});
  EXPECT_EQ(gb.code, cli::kOk);
  EXPECT_TRUE(has(gb.out, "\nx0^2 - 1/2*x1*x2\n")) << gb.out;

  const auto lex = run({"--order", "lex", "--json", "gb", data("hyperplane_p3.txt")});
  EXPECT_EQ(lex.code, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(lex.out).at("order"), "lex");

  const auto crit = run({"critical", data("six_points_p3.txt")});
  EXPECT_TRUE(has(crit.out, "mu(I_r) = 16"));
  EXPECT_TRUE(has(crit.out, "I_r = m^r: no"));
}

TEST(Cli, ReferenceExamplesSingleRow) {
  const auto r = run({"paper-examples", "--row", "four-points-P2"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  EXPECT_TRUE(has(r.out, "mu(J∩I^2): expected 11, computed 11"));
  EXPECT_EQ(run({"paper-examples", "--row", "no-such-row"}).code, cli::kFailure);
}

TEST(Cli, ConjectureIsDeterministicAndLabelled) {
  const auto a = run({"--seed", "7", "conjecture", "--n", "3", "--trials", "2"});
  const auto b = run({"--seed", "7", "conjecture", "--n", "3", "--trials", "2"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("EXPERIMENT", 0), 0u);
  const auto j = run({"--json", "--seed", "7", "conjecture", "--n", "3", "--trials", "1"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("label"), "EXPERIMENT");
  EXPECT_EQ(doc.at("seed"), 7);
  EXPECT_EQ(doc.at("trials").size(), 1u);
  EXPECT_EQ(run({"conjecture", "--n", "2"}).code, cli::kFailure);
}

TEST(Cli, ScalarIsaGivesSameOutput) {
  const auto a = run({"gb", data("six_points_p3.txt")});
  const auto b = run({"--isa", "scalar", "gb", data("six_points_p3.txt")});
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace aluffi
