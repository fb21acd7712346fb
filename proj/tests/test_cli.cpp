#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "webiso/report.hpp"

namespace fs = std::filesystem;
using webiso::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "webiso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = webiso::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("webiso_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kDiagonal = R"j({"n": 3, "f": "(x2*x3+x3*x1-2*x1*x2)/(x1+x2-2*x3)", "base": ["0", "1", "2"], "order": 10})j";

}  // namespace

TEST_F(CliTest, AnalyzeDiagonalWeb) {
  const Result r = run({"analyze", file("dd.json", kDiagonal)});
  ASSERT_EQ(r.code, webiso::cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "analyze");
  EXPECT_EQ(j["report"]["symmetries"]["dim"], 3);
  EXPECT_EQ(j["report"]["decomposition"]["factors"][0]["action"], "transverse");
  EXPECT_EQ(j["report"]["theorem_bound"]["passed"], true);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const std::string web = file("dd.json", kDiagonal);
  const Result a = run({"analyze", web});
  const Result b = run({"analyze", web});
  EXPECT_EQ(a.out, b.out);
  const std::string out = (dir_ / "report.json").string();
  ASSERT_EQ(run({"analyze", web, "--out", out}).code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), a.out);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"analyze", (dir_ / "missing.json").string()}).code, webiso::cli::kUsage);
  EXPECT_EQ(run({"analyze", file("bad.json", "{not json")}).code, webiso::cli::kUsage);
  const std::string web = file("dd.json", kDiagonal);
  EXPECT_EQ(run({"analyze", web, "-W", "3"}).code, webiso::cli::kUsage);
  EXPECT_EQ(run({"analyze", web, "-W", "8", "-D", "8"}).code, webiso::cli::kUsage);
  EXPECT_EQ(run({}).code, webiso::cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, webiso::cli::kUsage);
  EXPECT_EQ(run({"atlas", "verify", "no-such-entry"}).code, webiso::cli::kUsage);
  EXPECT_EQ(run({"atlas", "verify"}).code, webiso::cli::kUsage);
}

TEST_F(CliTest, InvalidWebs) {
  EXPECT_EQ(run({"analyze", file("deg.json", R"j({"n": 2, "f": "x1*x2"})j")}).code, webiso::cli::kInvalidWeb);
  EXPECT_EQ(run({"analyze", file("parse.json", R"j({"n": 2, "f": "x1 + x7"})j")}).code, webiso::cli::kInvalidWeb);
  EXPECT_EQ(run({"normal-form", file("exp.json", R"j({"n": 2, "f": "x1 + exp(x2)", "base": [0, 1]})j")}).code,
            webiso::cli::kInvalidWeb);
}

TEST_F(CliTest, VerifyField) {
  const std::string web = file("dd.json", kDiagonal);
  const Result r = run({"verify-field", web, file("f.json", R"j({"components": [[1], [1], [1]]})j")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["certificate"]["holds"], true);
  EXPECT_EQ(j["certificate"]["exact"], true);
  const Result bad = run({"verify-field", web, file("g.json", R"j({"components": [[0, 1], [0], [0]]})j")});
  EXPECT_EQ(json::parse(bad.out)["certificate"]["holds"], false);
}

TEST_F(CliTest, ParallelizableAndNormalForm) {
  const std::string web = file("sum.json", R"j({"n": 3, "f": "x1 + x2 + x3"})j");
  const Result p = run({"parallelizable", web});
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(json::parse(p.out)["parallelizability"]["verdict"], "parallelizable-to-order-W");
  const Result n = run({"normal-form", web, "-W", "6"});
  ASSERT_EQ(n.code, 0);
  EXPECT_EQ(json::parse(n.out)["normal_form"]["linear_to_order"], 6);
}

TEST_F(CliTest, AtlasListAndVerify) {
  const Result l = run({"atlas", "list"});
  ASSERT_EQ(l.code, 0);
  const json j = json::parse(l.out);
  EXPECT_EQ(j["entries"].size(), webiso::atlas_entries().size());
  const Result v = run({"atlas", "verify", "commutative-n3-m2"});
  ASSERT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(json::parse(v.out)["verification"]["status"], "confirmed");
}

TEST_F(CliTest, AtlasExport) {
  const Result e = run({"atlas", "export"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(json::parse(e.out)["entries"].size(), webiso::atlas_entries().size());
}
