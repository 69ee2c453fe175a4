#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circweb/catalog.hpp"
#include "circweb/cli.hpp"
#include "circweb/render.hpp"

using namespace circweb;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "circweb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  auto dir = fs::temp_directory_path() / "circweb-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, ClassifyLine) {
  auto r = run({"classify-line", "0:0:1:0:0:0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "hyperbolic (rotation-conjugate)\n");
  r = run({"classify-line", "0:0:0:0:0:1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("elliptic"), std::string::npos);
  EXPECT_EQ(run({"classify-line", "1:2:3"}).code, 2);
  EXPECT_EQ(run({"classify-line", "0:0:0:0:0:0"}).code, 2);
}

TEST(Cli, VerifyRangeViolation) {
  const auto r = run({"verify", "type05", "--param", "c=0.5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("c>1"), std::string::npos);
  EXPECT_EQ(run({"verify", "type05", "--param", "c"}).code, 2);
  EXPECT_EQ(run({"verify", "nope"}).code, 2);
  EXPECT_EQ(run({"verify", "type05", "--grid", "0"}).code, 2);
}

TEST(Cli, VerifyPassAndFail) {
  auto r = run({"verify", "type05", "--param", "c=3"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = run({"verify", "control-type05-shifted"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"verify", "type13", "--sampling", "halton"}).code, 0);
  EXPECT_EQ(run({"verify", "type13", "--sampling", "random"}).code, 2);
}

TEST(Cli, VerifyAllJsonReport) {
  const auto path = temp_file("verify.json");
  const auto r = run({"verify", "all", "--grid", "20", "--tol", "1e-7", "--json", path.string()});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["schema_version"], cli::kSchemaVersion);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["grid"], 20);
  EXPECT_EQ(j["sampling"], "regular");
  EXPECT_EQ(j["summary"]["status"], "PASS");
  int expected = 0;
  for (const auto& id : catalog_ids()) expected += spec_of(id).expected_hexagonal;
  ASSERT_EQ(static_cast<int>(j["webs"].size()), expected);
  for (const auto& w : j["webs"]) {
    EXPECT_TRUE(w["pass"].get<bool>()) << w["id"];
    for (const char* key : {"id", "params", "points_tested", "points_skipped", "max", "mean", "max_defect",
                            "wall_seconds"})
      EXPECT_TRUE(w.contains(key)) << key;
  }
}

TEST(Cli, Curvature) {
  auto r = run({"curvature", "type05", "--at", "0.2,1.0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("abr residual"), std::string::npos);
  EXPECT_EQ(run({"curvature", "type05", "--at", "0.2"}).code, 2);
  // on the envelope x^2 = y^2 the point is irregular
  EXPECT_EQ(run({"curvature", "type05", "--at", "1,1"}).code, 1);
}

TEST(Cli, Singular) {
  const auto path = temp_file("singular.json");
  auto r = run({"singular", "3p-hhh", "--json", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  const auto j = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(j["schema_version"], cli::kSchemaVersion);
  EXPECT_EQ(j["verdict"], "PASS");
  EXPECT_EQ(j["pairs"].size(), 3u);
  EXPECT_EQ(run({"singular", "control-3p-hhh-tilted"}).code, 1);
  r = run({"singular", "3p-eee"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("NOT VERIFIABLE"), std::string::npos);
  EXPECT_EQ(run({"singular", "type05"}).code, 2);
}

TEST(Cli, Subwebs) {
  auto r = run({"subwebs", "A4", "--verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS: 4/4"), std::string::npos);
  r = run({"subwebs", "A6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 20);
  EXPECT_EQ(run({"subwebs", "A5"}).code, 2);
}

TEST(Cli, Render) {
  const auto path = temp_file("type13.svg");
  auto r = run({"render", "type13", "-o", path.string(), "--leaves", "12"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto svg = slurp(path);
  RenderConfig cfg;
  cfg.leaves = 12;
  EXPECT_EQ(svg, render_web(build("type13"), cfg));
  EXPECT_EQ(run({"render", "type13", "-o", path.string(), "--window", "0,0,0,0"}).code, 2);
  EXPECT_EQ(run({"render", "type13", "-o", path.string(), "--leaves", "1"}).code, 2);
  EXPECT_EQ(run({"render", "type13"}).code, 2);
}

TEST(Cli, CatalogList) {
  const auto r = run({"catalog", "list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), static_cast<long>(catalog_ids().size()));
  EXPECT_NE(r.out.find("type10"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ExecutableExitCodes) {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(CIRCWEB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int s = std::system(cmd.c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("classify-line 0:0:1:0:0:0"), 0);
  EXPECT_EQ(status("verify type05 --param c=0.5"), 2);
  EXPECT_EQ(status("verify control-type05-shifted"), 1);
}
