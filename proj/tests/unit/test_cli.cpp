#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "treetropy/io.hpp"

namespace treetropy {
namespace {

struct Result {
  int status = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.status = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, ZeroOnP2) {
  const Result r = run({"zero", "4: 0 2 | 0 1 | 1 3"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_NE(r.out.find("factors: (2, 2)"), std::string::npos);
}

TEST(Cli, ZeroOnPositivePattern) {
  const Result r = run({"zero", "6: 0 1 | 4 5 | 1 2 3 4"});
  EXPECT_EQ(r.status, cli::kNegative);
  EXPECT_NE(r.out.find("no trivial block structure"), std::string::npos);
}

TEST(Cli, ConstructExcluded) {
  const Result r = run({"construct", "8", "5"});
  EXPECT_EQ(r.status, cli::kNegative);
  EXPECT_NE((r.out + r.err).find("NotRepresentable"), std::string::npos);
}

TEST(Cli, ConstructAdmissible) {
  const Result r = run({"construct", "8", "4"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_NE(r.out.find("8: 0 1 2 4 | 1 5 | 2 6 | 3 5 | 3 7"), std::string::npos);
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run({"zero", "4: 0 1 | 2 3"}).status, cli::kBadInput);
  EXPECT_EQ(run({"zero", "nonsense"}).status, cli::kBadInput);
  const Result flag = run({"zero", "--bogus", "4: 0 1 | 1 2 | 1 3"});
  EXPECT_EQ(flag.status, cli::kBadInput);
  EXPECT_NE(flag.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(run({}).status, cli::kBadInput);
}

TEST(Cli, StdinAndFormats) {
  const Result r = run({"--format", "json", "validate", "-"}, "4: 0 2 | 0 1 | 1 3\n");
  ASSERT_EQ(r.status, cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(parse_pattern_json(doc["pattern"].dump()), parse_pattern_text("4: 0 2 | 0 1 | 1 3"));

  const Result dot = run({"matrix", "--format", "dot", "4: 0 2 | 0 1 | 1 3"});
  EXPECT_NE(dot.out.find("\"0-2\" -> \"1-3\""), std::string::npos);
  const Result csv = run({"matrix", "--format", "csv", "4: 0 2 | 0 1 | 1 3"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "path,0-1,0-2,1-3");
}

TEST(Cli, Collapse) {
  const Result r = run({"collapse", "8: 0 2 6 | 0 1 3 4 5 7"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_NE(r.out.find("collapse: 4: 0 1 3 | 0 2"), std::string::npos);
}

TEST(Cli, Explode) {
  const Result r = run({"explode", "base=2 ne ee2@0 ne"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_NE(r.out.find("16:"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"zero", "8: 0 2 6 | 0 1 3 4 5 7"},
      {"--format", "json", "entropy", "6: 0 1 | 4 5 | 1 2 3 4"},
      {"enumerate", "6", "--zero-only"},
      {"construct", "--table", "16", "5"},
      {"--format", "json", "construct", "12", "3"},
  };
  for (const auto& args : commands) {
    const Result a = run(args);
    const Result b = run(args);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

}  // namespace
}  // namespace treetropy
