#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "covariant/cli.hpp"

using namespace covariant;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"covariant"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifyS3Json) {
  const CliRun r = run({"verify", "--group", "S3", "--trials", "100", "--seed", "7", "--format", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  std::size_t reports = 0;
  for (const auto& c : doc["cases"]) {
    EXPECT_EQ(c["case_key"]["group"], "S3");
    for (const auto& t : c["theorems"]) {
      ++reports;
      EXPECT_EQ(t["status"], "pass");
    }
  }
  EXPECT_EQ(reports, 84u);
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(doc["trials"], 100);
}

TEST(Cli, JsonIsByteStable) {
  const CliRun a = run({"verify", "--group", "D4", "--trials", "10", "--format", "json", "--threads", "1"});
  const CliRun b = run({"verify", "--group", "D4", "--trials", "10", "--format", "json", "--threads", "3"});
  ASSERT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TheoremFailureExitsOne) {
  const CliRun r = run({"verify-axb", "--omega", "1.0", "--tol", "1e-300"});
  EXPECT_EQ(r.code, kExitTheoremFailure) << r.err;
}

TEST(Cli, BadLatinSquareNamesTheRow) {
  const CliRun r = run({"verify", "--group", COVARIANT_TEST_DATA_DIR "/bad_latin.json"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("row 1"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("--group"), std::string::npos) << r.err;
  const CliRun t = run({"enumerate", "--table", COVARIANT_TEST_DATA_DIR "/bad_latin.json"});
  EXPECT_EQ(t.code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--group", "Z99999"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--group", "S3", "--u", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--group", "S3", "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--group", "S3", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  const CliRun coarse = run({"verify-axb", "--omega", "3"});
  EXPECT_EQ(coarse.code, kExitUsage);
  EXPECT_NE(coarse.err.find("--nodes"), std::string::npos) << coarse.err;
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, VerifyAxb) {
  const CliRun r = run({"verify-axb", "--omega", "1.0", "--nodes", "128", "--format", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["cases"].size(), 1u);
  for (const auto& t : doc["cases"][0]["theorems"]) EXPECT_LE(t["residual"].get<double>(), 1e-5) << t["id"];
}

TEST(Cli, Enumerate) {
  const CliRun s3 = run({"enumerate", "--group", "S3", "--format", "json"});
  ASSERT_EQ(s3.code, kExitPass);
  const auto doc = nlohmann::json::parse(s3.out);
  std::vector<std::size_t> counts;
  for (const auto& n : doc["normal_subgroups"]) counts.push_back(n["characters"].size());
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 3, 2}));

  const auto trivial = nlohmann::json::parse(run({"enumerate", "--group", "trivial", "--format", "json"}).out);
  ASSERT_EQ(trivial["normal_subgroups"].size(), 1u);
  EXPECT_EQ(trivial["normal_subgroups"][0]["characters"].size(), 1u);

  const auto q8 = nlohmann::json::parse(run({"enumerate", "--group", "Q8", "--format", "json"}).out);
  std::vector<std::size_t> sizes;
  for (const auto& n : q8["normal_subgroups"]) sizes.push_back(n["size"]);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 4, 4, 4, 8}));

  EXPECT_NE(run({"enumerate", "--group", "S3"}).out.find("3 normal subgroups"), std::string::npos);
}

TEST(Cli, OutWritesFile) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "covariant_cli_out.json";
  std::filesystem::remove(path);
  const CliRun r = run({"verify", "--group", "Z2", "--trials", "5", "--format", "json", "--out", path.c_str()});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(text.str())["cases"].size(), 3u);
  std::filesystem::remove(path);
}

TEST(Cli, GroupsListsFamilies) {
  const CliRun r = run({"groups"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("S<n>"), std::string::npos);
}

TEST(Cli, ReportCoversFiniteAndContinuousCases) {
  const CliRun r = run({"report", "--group", "Z2", "--group", "S3", "--trials", "5", "--axb-trials", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["cases"].size(), 3u + 6u + 1u);
}
