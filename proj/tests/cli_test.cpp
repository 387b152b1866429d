#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace spokecycles::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::vector<json> lines;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r{run(args, out, err), {}, err.str()};
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) r.lines.push_back(json::parse(line));
  }
  return r;
}

json without_timing(json j) {
  j.erase("timing");
  return j;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("spokecycles_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

TEST(Cli, ConstructGraph6) {
  const Result r = invoke({"construct", "--n", "4"});
  ASSERT_EQ(r.code, kOk);
  ASSERT_EQ(r.lines.size(), 1u);
  EXPECT_EQ(r.lines[0]["graph6"], "GhMGmC");
  EXPECT_EQ(r.lines[0]["alpha"], json({0, 7}));
  EXPECT_EQ(r.lines[0]["three_connected"], true);
}

TEST(Cli, ConstructEdgeList) {
  const Result r = invoke({"construct", "--n", "3", "--emit", "edgelist"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.lines[0]["edges"].size(), 9u);
  EXPECT_FALSE(r.lines[0].contains("graph6"));
}

TEST(Cli, CountMethodsAgree) {
  for (const char* method : {"subset", "bir", "oracle"}) {
    const Result r = invoke({"count", "--n", "6", "--method", method});
    ASSERT_EQ(r.code, kOk) << method;
    EXPECT_EQ(r.lines[0]["count"], 79) << method;
  }
  const Result closed = invoke({"count", "--n", "6", "--method", "closed"});
  EXPECT_EQ(closed.lines[0]["count"], "79");
  EXPECT_EQ(closed.lines[0]["alpha"], "33");
}

TEST(Cli, CountThroughEdge) {
  const Result r = invoke({"count", "--n", "5", "--edge", "0,9"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.lines[0]["count"], 20);
  EXPECT_EQ(invoke({"count", "--n", "5", "--edge", "0,5"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--n", "5", "--edge", "zero"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--n", "5", "--method", "bir", "--edge", "0,9"}).code, kUsage);
}

TEST(Cli, ClosedFormHandlesLargeN) {
  const Result r = invoke({"count", "--n", "100", "--method", "closed"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.lines[0]["count"], "3928413764606871165626");
}

TEST(Cli, CapsAndUsageErrors) {
  EXPECT_EQ(invoke({"count", "--n", "32"}).code, kCapExceeded);
  EXPECT_EQ(invoke({"count", "--n", "11", "--method", "oracle"}).code, kCapExceeded);
  EXPECT_EQ(invoke({"search", "--vertices", "18"}).code, kCapExceeded);
  EXPECT_EQ(invoke({"count", "--n", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"count", "--n", "4", "--method", "magic"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"search", "--vertices", "9"}).code, kUsage);
}

TEST(Cli, OracleReadsGraph6File) {
  const auto dir = temp_dir("oracle");
  std::filesystem::create_directories(dir);
  const auto file = dir / "in.g6";
  std::ofstream(file) << "C~\nEFz_\n\nIheA@GUAo\n";
  const Result r = invoke({"oracle", "--in", file.string()});
  ASSERT_EQ(r.code, kOk);
  ASSERT_EQ(r.lines.size(), 3u);
  EXPECT_EQ(r.lines[0]["cycle_count"], 7);
  EXPECT_EQ(r.lines[1]["cycle_count"], 15);
  EXPECT_EQ(r.lines[2]["cycle_count"], 57);
  EXPECT_EQ(r.lines[2]["g6"], "IheA@GUAo");
  EXPECT_EQ(invoke({"oracle", "--in", (dir / "missing.g6").string()}).code, kUsage);
  std::ofstream(dir / "bad.g6") << "C\n";
  EXPECT_EQ(invoke({"oracle", "--in", (dir / "bad.g6").string()}).code, kUsage);
}

TEST(Cli, SearchWritesReportAndGraph6File) {
  const auto dir = temp_dir("search");
  const Result r = invoke({"search", "--vertices", "10", "--emit-dir", dir.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const json& j = r.lines[0];
  EXPECT_EQ(j["extremal_value"], 46);
  EXPECT_EQ(j["conjecture_holds"], true);
  EXPECT_EQ(j["oracle_check"], "full");
  std::ifstream in(dir / "extremal_10_min.g6");
  std::vector<std::string> written;
  for (std::string line; std::getline(in, line);) written.push_back(line);
  EXPECT_EQ(json(written), j["extremal_classes"]);
}

TEST(Cli, SearchOutputIndependentOfJobs) {
  const auto dir = temp_dir("jobs");
  const Result a =
      invoke({"search", "--vertices", "12", "--objective", "max", "--emit-dir", dir.string()});
  const Result b = invoke({"search", "--vertices", "12", "--objective", "max", "--jobs", "3",
                           "--emit-dir", dir.string()});
  ASSERT_EQ(a.code, kOk);
  ASSERT_EQ(b.code, kOk);
  EXPECT_EQ(without_timing(a.lines[0]), without_timing(b.lines[0]));
  EXPECT_EQ(a.lines[0]["below_upper_bound"], true);
}

TEST(Cli, SearchUsesEnvironmentDirectory) {
  const auto dir = temp_dir("env");
  ::setenv("SPOKECYCLES_OUT_DIR", dir.string().c_str(), 1);
  const Result r = invoke({"search", "--vertices", "6"});
  ::unsetenv("SPOKECYCLES_OUT_DIR");
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "extremal_6_min.g6"));
}

TEST(Cli, VerifyClaims) {
  const Result r = invoke({"verify-claims", "--vertices", "8", "12", "--samples", "500", "--seed",
                           "3"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.lines[0]["clean"], true);
  EXPECT_EQ(r.lines[0]["seed"], 3);
  EXPECT_EQ(r.lines[0]["vertices"], json({8, 12}));
}

TEST(Cli, VerifyReductions) {
  const Result r = invoke({"verify-reductions", "--min-n", "3", "--max-n", "5"});
  ASSERT_EQ(r.code, kOk);
  ASSERT_EQ(r.lines.size(), 12u);
  for (const json& j : r.lines) EXPECT_EQ(j["isomorphic_to_smaller"], true);
  EXPECT_EQ(invoke({"verify-reductions", "--min-n", "2"}).code, kUsage);
}

TEST(Cli, Table1SmallRows) {
  const Result r = invoke({"table1", "--max-vertices", "12"});
  ASSERT_EQ(r.code, kOk) << r.err;
  ASSERT_EQ(r.lines.size(), 4u);
  for (const json& j : r.lines) {
    EXPECT_EQ(j["matches_reference"], true);
    EXPECT_EQ(j["h2n_extremal"], true);
  }
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(run({"table1", "--max-vertices", "8", "--pretty"}, out, err), kOk);
  const json doc = json::parse(out.str());
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["reproduced"], true);
}

TEST(Cli, Help) {
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run({"--help"}, out, err), kOk);
  EXPECT_NE(out.str().find("table1"), std::string::npos);
}

}  // namespace
}  // namespace spokecycles::cli
