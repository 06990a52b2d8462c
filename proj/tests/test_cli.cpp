#include "hessloci/cli/commands.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace hessloci;
using namespace hessloci::cli;

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HESSLOCI_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& [k, v] : j.items())
      if (has_float(v)) return true;
  return false;
}

}  // namespace

TEST(Report, PassRules) {
  Report r("x");
  r.expect("a", "1 = 1", 1, 1);
  EXPECT_TRUE(r.all_pass());
  r.expect_set("b", "sets", json{1, 2, 3}, json{3, 1, 2});
  EXPECT_TRUE(r.all_pass());
  r.expect_proportional("c", "scalar", json());
  EXPECT_FALSE(r.all_pass());
  EXPECT_EQ(r.failures(), 1u);
  auto j = r.to_json();
  EXPECT_EQ(j["claims"].size(), 3u);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_FALSE(j.contains("runtime_ms"));
  EXPECT_EQ(j["claims"][1]["rule"], "set");
}

TEST(Report, ExactSerialization) {
  EXPECT_EQ(exact(Rational(777, 4)), (json{{"num", 777}, {"den", 4}}));
  EXPECT_EQ(exact(Rational(-3, 6)), (json{{"num", -1}, {"den", 2}}));
  BigInt big = BigInt(1) << 80;
  EXPECT_EQ(exact(big), json(big.str()));
  EXPECT_EQ(exact(BigInt(-5)), json(-5));
}

TEST(Commands, ChernAndBottPassWithoutFloats) {
  auto c = cmd_chern({});
  auto b = cmd_bott({});
  EXPECT_TRUE(c.all_pass()) << c.summary();
  EXPECT_TRUE(b.all_pass()) << b.summary();
  EXPECT_FALSE(has_float(c.to_json()));
  EXPECT_FALSE(has_float(b.to_json()));
  EXPECT_EQ(c.to_json()["claims"][11]["computed"], (json{{"num", 357}, {"den", 1}}));
}

TEST(Commands, IdentitiesAndCorruption) {
  Options o;
  o.instances = 80;
  EXPECT_TRUE(cmd_identities(o).all_pass());
  o.corrupt = true;
  auto bad = cmd_identities(o);
  EXPECT_FALSE(bad.all_pass());
  EXPECT_EQ(bad.failures(), 3u);
}

TEST(Commands, StrataCases) {
  Options o;
  o.cubic = "cuspidal3";
  auto cusp = cmd_strata(o);
  EXPECT_TRUE(cusp.all_pass()) << cusp.summary();
  o.cubic = "klein6";
  EXPECT_TRUE(cmd_strata(o).all_pass());
  Options r;
  r.seed = 3;
  auto rand = cmd_strata(r);
  EXPECT_TRUE(rand.all_pass()) << rand.summary();
  EXPECT_EQ(rand.to_json()["inputs"]["n"], 3);
  Options big;
  big.n = 7;
  big.prime = 101;
  EXPECT_THROW(cmd_strata(big), BudgetError);
}

TEST(Commands, HilbertTargets) {
  Options o;
  EXPECT_TRUE(cmd_hilbert(o).all_pass());
  o.target = "cubic-surface-points";
  EXPECT_TRUE(cmd_hilbert(o).all_pass());
  o.target = "nonsense";
  EXPECT_THROW(cmd_hilbert(o), std::invalid_argument);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_cli("chern").status, 0);
  EXPECT_EQ(run_cli("identities --instances 40").status, 0);
  auto bad = run_cli("identities --instances 40 --corrupt");
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("FAIL  hessian.b"), std::string::npos);
  EXPECT_EQ(run_cli("strata --n 7 --prime 101").status, 2);
  EXPECT_NE(run_cli("strata --cubic nosuch").status, 0);
  EXPECT_NE(run_cli("").status, 0);
}

TEST(Binary, DeterministicJson) {
  for (const char* args : {"bott --json -", "strata --seed 5 --json -", "identities --instances 40 --seed 9 --json -"}) {
    auto a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    auto j = json::parse(a.out);
    EXPECT_FALSE(j.contains("runtime_ms"));
    EXPECT_TRUE(j["pass"].get<bool>());
  }
  EXPECT_NE(run_cli("identities --instances 40 --seed 9 --json -").out,
            run_cli("identities --instances 40 --seed 10 --json -").out);
  auto timed = json::parse(run_cli("chern --timing --json -").out);
  EXPECT_TRUE(timed.contains("runtime_ms"));
}
