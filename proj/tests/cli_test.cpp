#include <gtest/gtest.h>

#include "cli.hpp"
#include "fixtures.hpp"

namespace resgame::cli {
namespace {

std::string game(const char* name) { return testing::games_dir() + "/" + name + ".rg"; }

Report run_args(std::vector<std::string> args) { return run(args); }

TEST(Cli, ProveExitCodes) {
  EXPECT_EQ(run_args({"prove", "--mode", "affine", "A, B |- A"}).exit_code, kYes);
  EXPECT_EQ(run_args({"prove", "--mode", "linear", "A, B |- A"}).exit_code, kNo);
  EXPECT_EQ(run_args({"prove", "A |- A * A"}).exit_code, kNo);
  EXPECT_EQ(run_args({"prove", "A * |- A"}).exit_code, kUsage);
  EXPECT_EQ(run_args({"prove", "--fragment", "mll", "A & B |- A"}).exit_code, kUsage);
  EXPECT_EQ(run_args({"prove", "--prover-budget-ms", "0", "A, B |- A * B"}).exit_code, kExhausted);
}

TEST(Cli, ProveTrace) {
  const Report r = run_args({"prove", "--trace", "flour, flour -o bread |- bread"});
  EXPECT_EQ(r.exit_code, kYes);
  EXPECT_NE(r.out.find("-oL  flour, flour -o bread |- bread"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_args({}).exit_code, kUsage);
  EXPECT_EQ(run_args({"frobnicate"}).exit_code, kUsage);
  EXPECT_EQ(run_args({"prove", "--bogus", "A |- A"}).exit_code, kUsage);
  EXPECT_EQ(run_args({"nash", game("elim")}).exit_code, kUsage);  // --profile is required
  EXPECT_EQ(run_args({"equilibria", game("elim"), "--pref", "greedy"}).exit_code, kUsage);
  EXPECT_EQ(run_args({"validate", game("does-not-exist")}).exit_code, kUsage);
  EXPECT_EQ(run_args({"coop", game("breakfast"), "--veto", "--dummy"}).exit_code, kUsage);
  EXPECT_EQ(run_args({"--help"}).exit_code, kYes);
}

TEST(Cli, FixtureVerdicts) {
  EXPECT_EQ(run_args({"equilibria", game("elim"), "--pref", "dichotomous"}).exit_code, kYes);
  EXPECT_EQ(run_args({"equilibria", game("h"), "--pref", "parsimonious"}).exit_code, kNo);
  EXPECT_EQ(run_args({"nash", game("elim"), "--profile", "1: A; 2: B"}).exit_code, kYes);
  EXPECT_EQ(run_args({"nash", game("divorce"), "--pref", "parsimonious", "--profile", "a: aclock"}).exit_code, kNo);
  EXPECT_EQ(run_args({"eliminate", game("elim"), "--profile", "1:; 2:"}).exit_code, kYes);
  EXPECT_EQ(run_args({"eliminate", game("elim"), "--profile", "1: A; 2: B"}).exit_code, kNo);
  EXPECT_EQ(run_args({"construct", game("h"), "--pref", "parsimonious", "--profile", "1: A; 2: A"}).exit_code, kYes);
  EXPECT_EQ(run_args({"coop", game("breakfast"), "--veto"}).exit_code, kYes);
  EXPECT_EQ(run_args({"coop", game("breakfast"), "--core", "0,1,0"}).exit_code, kYes);
  EXPECT_EQ(run_args({"coop", game("breakfast"), "--core", "1,0,0"}).exit_code, kNo);
  EXPECT_EQ(run_args({"coop", game("leftover"), "--coalition", "1,2"}).exit_code, kNo);
  EXPECT_EQ(run_args({"coop", game("breakfast"), "--model", "mnigcrg", "--veto"}).exit_code, kUsage);
  EXPECT_EQ(run_args({"validate", game("alanfish")}).exit_code, kYes);
}

TEST(Cli, Caps) {
  EXPECT_EQ(run_args({"equilibria", game("alanfish"), "--limit-profiles", "8"}).exit_code, kExhausted);
  EXPECT_EQ(run_args({"construct", game("alanfish"), "--limit-pool", "3", "--pref", "parsimonious", "--profile",
                      "a: H2O -o ~T, H2O * H2O -o H2 * H2 * O2; f: H2O, H2O, H2O"})
                .exit_code,
            kExhausted);
}

TEST(Cli, ConstructWitnessJson) {
  const Report r =
      run_args({"construct", game("h"), "--pref", "parsimonious", "--profile", "1: A; 2: A", "--json"});
  ASSERT_EQ(r.exit_code, kYes);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(doc["command"], "construct");
  EXPECT_EQ(doc["verdict"], true);
  EXPECT_EQ(doc["witness"]["redistribution"]["1"], nlohmann::json::array());
  EXPECT_EQ(doc["witness"]["redistribution"]["2"], nlohmann::json({"A", "A"}));
  EXPECT_EQ(doc["witness"]["profile"]["2"], nlohmann::json({"A", "A"}));
}

TEST(Cli, JsonSchema) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"prove", "A |- A", "--json"},
           {"equilibria", game("alanfish"), "--json"},
           {"coop", game("aigcrg-basic"), "--json"},
           {"validate", game("divorce"), "--json"},
       }) {
    const Report r = run(args);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    keys.erase(std::remove(keys.begin(), keys.end(), "witness"), keys.end());
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "verdict", "stats", "version"})) << args[0];
    for (const char* s : {"prover_queries", "nodes_expanded", "cache_hits", "wall_ms"})
      EXPECT_TRUE(doc["stats"].contains(s)) << s;
    EXPECT_EQ(doc["version"], kVersion);
  }
}

TEST(Cli, CoopTableJson) {
  const Report r = run_args({"coop", game("aigcrg-basic"), "--model", "mnigcrg", "--json"});
  const auto doc = nlohmann::ordered_json::parse(r.out);
  std::vector<int> values;
  for (const auto& row : doc["verdict"]) values.push_back(row["value"]);
  EXPECT_EQ(values, (std::vector<int>{0, 1, 0, 1, 1, 2, 2, 3}));
}

TEST(Cli, HumanOutputAnnotatesSatisfaction) {
  const Report r = run_args({"equilibria", game("alanfish")});
  EXPECT_NE(r.out.find("9 of 16 profiles are Nash equilibria (dichotomous)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("satisfied: a, f"), std::string::npos) << r.out;
}

TEST(Cli, DeterministicOutput) {
  auto strip = [](Report r) {
    r.json["stats"].erase("wall_ms");
    return std::make_pair(r.json.dump(), r.exit_code);
  };
  const std::vector<std::string> args = {"equilibria", game("divorce"), "--pref", "parsimonious", "--json"};
  const std::vector<std::string> parallel = {"equilibria", game("divorce"), "--pref", "parsimonious", "--json",
                                             "--jobs", "3"};
  EXPECT_EQ(strip(run(args)), strip(run(args)));
  auto a = strip(run(args));
  auto b = strip(run(parallel));
  EXPECT_EQ(nlohmann::json::parse(a.first)["verdict"], nlohmann::json::parse(b.first)["verdict"]);
  EXPECT_EQ(run_args({"equilibria", game("divorce")}).out, run_args({"equilibria", game("divorce")}).out);
}

}  // namespace
}  // namespace resgame::cli
