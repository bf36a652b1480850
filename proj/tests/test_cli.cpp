#include "cli.hpp"

#include "fricke/serialize.hpp"

#include <gtest/gtest.h>

#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fricke");
  std::ostringstream out, err;
  const int code = fricke::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Trace) {
  const Result r = run({"trace", "aW"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x*y - z\n");

  const Result j = run({"trace", "awAW", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  const fricke::Poly p = json::parse(j.out).get<fricke::Poly>();
  EXPECT_EQ(p.to_string(), "-x*y*z + x^2 + y^2 + z^2 - 2");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"trace", "ab"}).code, 2);
  EXPECT_NE(run({"trace", "ab"}).err.find("position 1"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"trace", "a", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "pretzel", "--n-range", "3..1"}).code, 2);
  EXPECT_EQ(run({"ring", "--u", "aw"}).code, 2);
  EXPECT_EQ(run({"variety", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Ring) {
  const Result r = run({"ring", "--u", "awAW", "--v", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("g1 = -x*y*z + x^2 + y^2 + z^2 - 4"), std::string::npos);

  const Result j = run({"ring", "--family", "thm1", "--r", "AWAwa", "--n", "3", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const fricke::GeneratorSet g = json::parse(j.out).get<fricke::GeneratorSet>();
  ASSERT_EQ(g.generators.size(), 2u);
  EXPECT_EQ(g.generators[0].to_string(), "-x*y*z^2 + x^2*z + y^2*z + z^3 - x*y + x - 3*z");
}

TEST(Cli, Pretzel) {
  const Result r = run({"pretzel", "--m", "2", "--n", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("u = wAWAw"), std::string::npos);
  const Result j = run({"pretzel", "--m", "0", "--n", "2", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const json parsed = json::parse(j.out);
  EXPECT_EQ(parsed.get<fricke::PretzelWords>().s.to_string(), "a");
  EXPECT_EQ(parsed.at("word_lemmas_pass"), true);
}

TEST(Cli, Variety) {
  const Result r = run({"variety", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("component_count"), 3);
  EXPECT_EQ(j.at("certificate").at("outputs").at("component_count"), 3);
  const fricke::ComponentReport report = j.get<fricke::ComponentReport>();
  EXPECT_EQ(report.count, 3);
  EXPECT_TRUE(report.certificate.pass());

  const Result t = run({"variety", "--n", "3"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("component_count = 2"), std::string::npos);
}

TEST(Cli, Verify) {
  const Result r = run({"verify", "--suite", "charring", "--n-range", "-2..4", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
  const Result p = run({"verify", "--suite", "pretzel", "--format", "json"});
  EXPECT_EQ(p.code, 0);
  EXPECT_TRUE(json::parse(p.out).get<fricke::Certificate>().pass());
  const Result t = run({"verify", "--suite", "trace", "--count", "10", "--seed", "3"});
  EXPECT_EQ(t.code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"verify", "--suite", "trace", "--count", "5", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
