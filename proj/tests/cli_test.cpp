#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "pdr/cli.hpp"

namespace pdr {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "pdr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "pdr_cli_test";
  void SetUp() override {
    std::filesystem::create_directories(dir);
    unsetenv("PDR_THREADS");
  }
  void TearDown() override {
    std::filesystem::remove_all(dir);
    unsetenv("PDR_THREADS");
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

TEST_F(Cli, ClassifyExitCodes) {
  const Result neg = run({"classify", "--group", "Z1", "--n", "4"});
  EXPECT_EQ(neg.code, 1);
  const Json j = Json::parse(neg.out);
  EXPECT_EQ(j["admits"], false);
  EXPECT_EQ(j["clause"], 3);
  EXPECT_NE(neg.err.find("clause 3"), std::string::npos);

  const Result pos = run({"classify", "--group", "Z4", "--n", "2"});
  EXPECT_EQ(pos.code, 0);
  EXPECT_EQ(Json::parse(pos.out)["admits"], true);
}

TEST_F(Cli, BuildThenVerifyJson) {
  const Result b = run({"build", "--group", "Q8", "--n", "3", "--out", path("q8.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  const Json j = Json::parse(slurp(path("q8.json")));
  EXPECT_EQ(j["certificate"]["aut_order"], 8);
  EXPECT_EQ(j["digraph"]["vertex_count"], 24);

  const Result v = run({"verify", "--group", "Q8", "--digraph", path("q8.json")});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(Json::parse(v.out)["outcome"], "exists");
}

TEST_F(Cli, BuildThenVerifyEdges) {
  const Result b = run({"build", "--group", "S3", "--n", "4", "--format", "edges", "--out", path("s3.txt")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(Json::parse(b.out)["method"], "drr-extension");
  EXPECT_EQ(run({"verify", "--group", "S3", "--digraph", path("s3.txt")}).code, 0);
  // Verified against the wrong group the translations no longer act.
  EXPECT_EQ(run({"verify", "--group", "Z6", "--digraph", path("s3.txt")}).code, 1);
}

TEST_F(Cli, VerifyRejectsTamperedDigraph) {
  ASSERT_EQ(run({"build", "--group", "Z5", "--n", "3", "--format", "edges", "--out", path("z5.txt")}).code, 0);
  std::ofstream(path("z5.txt"), std::ios::app) << "0 7\n";
  const Result v = run({"verify", "--group", "Z5", "--digraph", path("z5.txt")});
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(Json::parse(v.out)["checks"]["regular"], false);
  EXPECT_EQ(run({"verify", "--group", "Z4", "--digraph", path("z5.txt")}).code, 2);
}

TEST_F(Cli, DotOutput) {
  const Result r = run({"build", "--group", "Z2", "--n", "3", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_NE(r.out.find("a_1"), std::string::npos);
}

TEST_F(Cli, BuildNegative) {
  const Result r = run({"build", "--group", "Z3", "--n", "2"});
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["outcome"], "not-exists");
  EXPECT_EQ(j["candidates"], 20);
}

TEST_F(Cli, OutputIsByteIdentical) {
  const Result a = run({"build", "--group", "D4", "--n", "5"});
  const Result b = run({"build", "--group", "D4", "--n", "5"});
  EXPECT_EQ(a.out, b.out);
  setenv("PDR_THREADS", "4", 1);
  const Result c = run({"build", "--group", "D4", "--n", "5"});
  EXPECT_EQ(a.out, c.out);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"classify", "--group", "Q9", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"classify", "--group", "Z2"}).code, 2);
  EXPECT_EQ(run({"build", "--group", "Z2", "--n", "3", "--format", "svg"}).code, 2);
  EXPECT_EQ(run({"build", "--group", "Z4", "--n", "3", "--randomized", "--exhaustive"}).code, 2);
  EXPECT_EQ(run({"verify", "--group", "Z2", "--digraph", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"search", "hdr"}).code, 2);
  EXPECT_EQ(run({"nonexist", "--group", "Z2"}).code, 2);
  setenv("PDR_THREADS", "many", 1);
  EXPECT_EQ(run({"nonexist", "--group", "Z2", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, Search) {
  const Result drr = run({"search", "drr", "--group", "Z4"});
  ASSERT_EQ(drr.code, 0);
  EXPECT_EQ(Json::parse(drr.out)["R"]["labels"], Json::array({"a"}));

  const Result hdr = run({"search", "hdr", "--group", "Z4", "--set", "1"});
  ASSERT_EQ(hdr.code, 0) << hdr.err;
  EXPECT_EQ(Json::parse(hdr.out)["L"]["elements"].size(), 1u);

  const Result triv = run({"search", "trivial-npdr", "--n", "7", "--seed", "5"});
  ASSERT_EQ(triv.code, 0);
  EXPECT_EQ(Json::parse(triv.out)["digraph"]["vertex_count"], 7);
}

TEST_F(Cli, BudgetExhausted) {
  EXPECT_EQ(run({"search", "drr", "--group", "S3", "--budget", "1", "--exhaustive"}).code, 3);
  EXPECT_EQ(run({"search", "trivial-npdr", "--n", "6", "--budget", "1", "--exhaustive"}).code, 3);
  EXPECT_EQ(run({"build", "--group", "S3", "--n", "3", "--budget", "1", "--exhaustive"}).code, 3);
}

TEST_F(Cli, Nonexist) {
  const Result z1 = run({"nonexist", "--group", "Z1", "--n", "4"});
  EXPECT_EQ(z1.code, 1);
  EXPECT_EQ(Json::parse(z1.out)["candidates_enumerated"], 4096);

  const Result q8 = run({"nonexist", "--group", "Q8", "--drr"});
  EXPECT_EQ(q8.code, 1);
  EXPECT_EQ(Json::parse(q8.out)["candidates_enumerated"], 128);

  const Result z4 = run({"nonexist", "--group", "Z4", "--n", "2"});
  EXPECT_EQ(z4.code, 0);
  EXPECT_EQ(Json::parse(z4.out)["claim"], "counterexample found");

  EXPECT_EQ(run({"nonexist", "--group", "Z7", "--n", "3"}).code, 2);
}

}  // namespace
}  // namespace pdr
