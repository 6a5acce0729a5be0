#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
  json last;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(HYPERLAB_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  const auto end = r.out.find_last_not_of('\n');
  if (end != std::string::npos) {
    const auto start = r.out.rfind('\n', end);
    r.last = json::parse(r.out.substr(start == std::string::npos ? 0 : start + 1, end + 1), nullptr, false);
  }
  return r;
}

std::string model(const char* name) { return std::string(HYPERLAB_MODELS) + "/" + name; }

}  // namespace

TEST(Cli, Build) {
  const CliRun r = run("build --model " + model("fixture_c.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  // Every A has A⁻ among ∅, {X}, {X,{1,2}}, M.
  EXPECT_EQ(r.last.at("P_O").size(), 8U);
  EXPECT_TRUE(r.last.contains("induced_topology"));
}

TEST(Cli, MClosure) {
  const CliRun r = run("mclosure --model " + model("fixture_b.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.last.at("closure").size(), 4U);
  EXPECT_EQ(r.last.at("convention"), "empty-is-covered");
  const CliRun strict = run("mclosure --strict-nonempty --model " + model("fixture_b.json"));
  EXPECT_EQ(strict.last.at("closure").size(), 3U);
}

TEST(Cli, FixpointFromHypermap) {
  const CliRun r = run("fixpoint --model " + model("fixture_c.json") + " --map " + model("fixture_c_psi.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.last.at("fixed_point"), json::array({"2"}));
  EXPECT_EQ(r.last.at("trace").size(), 3U);
  EXPECT_EQ(r.last.at("continuous"), true);
}

TEST(Cli, FixpointFromPointMap) {
  const CliRun r = run("fixpoint --model " + model("fixture_c.json") + " --map " + model("fixture_c_map.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.last.at("fixed_point"), json::array({"2"}));
}

TEST(Cli, Check) {
  CliRun r = run("check --prop P2.20 --model " + model("fixture_b.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.last.at("verdict"), "pass");
  r = run("check --prop T5.5 --model " + model("fixture_c.json") + " --map " + model("fixture_c_psi.json"));
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.last.at("verdict"), "pass");
}

TEST(Cli, SearchFindsCounterexample) {
  const CliRun r = run("search --prop T5.5 --drop-hypothesis \"X in M\" --max-points 2");
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_EQ(r.last.at("verdict"), "counterexample");
}

TEST(Cli, SweepRandom) {
  const CliRun r = run("sweep --prop P2.12 --max-points 4 --seed 3 --count 50");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.last.at("verdict"), "pass");
}

TEST(Cli, InputErrors) {
  CliRun r = run("check --prop NOPE --model " + model("fixture_b.json"));
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.last.at("error"), "UnknownProperty");
  r = run("build --model /nonexistent.json");
  EXPECT_EQ(r.status, 2);
  r = run("sweep --prop P2.20 --max-points 5");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.last.at("error"), "BudgetExceeded");
}
