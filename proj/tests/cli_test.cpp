// Copyright 2026 The threebox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "threebox/cli.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace threebox::cli {
namespace {

using nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args, const std::string& input = "", bool interactive = false) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, Streams{in, out, err, interactive});
  return {code, out.str(), err.str()};
}

ordered_json invoke_json(const std::vector<std::string>& args) {
  const auto r = invoke(args);
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return ordered_json::parse(r.out);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Quantum, ThreeBoxMeasureAExact) {
  const auto j = invoke_json({"quantum", "--scenario", "three-box", "--measure", "A", "--mode", "exact"});
  EXPECT_EQ(j.at("scenario"), "three-box");
  const auto& e = j.at("exact");
  EXPECT_NEAR(e.at("p_post").get<double>(), 1.0 / 9.0, 1e-15);
  EXPECT_NEAR(e.at("found_given_post").get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(e.at("weak_value_A").get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(e.at("weak_value_B").get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(e.at("weak_value_C").get<double>(), -1.0, 1e-12);
  EXPECT_TRUE(j.at("monte_carlo").is_null());
}

TEST(Quantum, SpinBoxDownAndThreeBoxNone) {
  const auto spin = invoke_json({"quantum", "--scenario", "spin-box", "--measure", "down"});
  EXPECT_NEAR(spin.at("exact").at("found_given_post").get<double>(), 1.0, 1e-12);
  EXPECT_FALSE(spin.at("exact").contains("weak_value_A"));
  const auto none = invoke_json({"quantum", "--measure", "none"});
  EXPECT_NEAR(none.at("exact").at("p_post").get<double>(), 1.0 / 9.0, 1e-15);
  EXPECT_FALSE(none.at("exact").contains("found_given_post"));
}

TEST(Quantum, InvalidCombinationsAreUsageErrors) {
  EXPECT_EQ(invoke({"quantum", "--scenario", "spin-box", "--measure", "A"}).code, kExitUsage);
  EXPECT_EQ(invoke({"quantum", "--scenario", "three-box", "--measure", "up"}).code, kExitUsage);
  EXPECT_EQ(invoke({"quantum", "--measure", "D"}).code, kExitUsage);
  EXPECT_EQ(invoke({"quantum", "--mode", "fast"}).code, kExitUsage);
  EXPECT_EQ(invoke({"quantum", "--runs", "0", "--mode", "mc"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"teleport"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Classical, KirkpatrickExact) {
  const auto j = invoke_json({"classical", "--game", "kirkpatrick", "--search", "S", "--mode", "exact"});
  EXPECT_EQ(j.at("exact").at("p_post"), "1/8");
  EXPECT_EQ(j.at("exact").at("found_given_post"), "1");
  EXPECT_EQ(j.at("exact").at("not_found_and_post"), "0");
  EXPECT_EQ(j.at("parameters").at("search"), "S");
}

TEST(Classical, SimplifiedLiteral) {
  const auto j = invoke_json({"classical", "--game", "simplified", "--search", "S", "--variant", "literal"});
  EXPECT_EQ(j.at("exact").at("found_given_post"), "1/3");
  EXPECT_EQ(j.at("exact").at("p_post"), "1/2");
  EXPECT_EQ(j.at("parameters").at("variant"), "literal");
  const auto faithful = invoke_json({"classical", "--game", "simplified", "--search", "D"});
  EXPECT_EQ(faithful.at("exact").at("p_post"), "1/6");
}

TEST(Classical, LeiferSpekkensMonteCarlo) {
  const auto j = invoke_json({"classical", "--game", "leifer-spekkens", "--search", "left", "--mode", "mc",
                              "--runs", "100000", "--seed", "42"});
  const auto& mc = j.at("monte_carlo");
  EXPECT_EQ(mc.at("runs"), 100000);
  EXPECT_EQ(mc.at("seed"), 42);
  EXPECT_EQ(mc.at("frequencies").at("found_given_post").get<double>(), 1.0);
  EXPECT_EQ(mc.at("counts").at("not_found_and_post"), 0);
  EXPECT_NEAR(mc.at("frequencies").at("p_post").get<double>(), 0.25, 5.0 * std::sqrt(0.25 * 0.75 / 100000));
}

TEST(Classical, InvalidCombinationsAreUsageErrors) {
  EXPECT_EQ(invoke({"classical", "--game", "kirkpatrick", "--search", "left"}).code, kExitUsage);
  EXPECT_EQ(invoke({"classical", "--game", "kirkpatrick", "--search", "H"}).code, kExitUsage);
  EXPECT_EQ(invoke({"classical", "--game", "move-game", "--search", "box3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"classical", "--game", "leifer-spekkens", "--search", "S"}).code, kExitUsage);
  EXPECT_EQ(invoke({"classical", "--game", "kirkpatrick", "--search", "S", "--variant", "literal"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"classical", "--game", "kirkpatrick"}).code, kExitUsage);
  EXPECT_EQ(invoke({"classical", "--game", "poker", "--search", "S"}).code, kExitUsage);
}

TEST(Classical, SameSeedSameOutputAcrossThreadCounts) {
  const std::vector<std::string> base{"classical", "--game", "move-game", "--search", "box2",
                                      "--mode", "mc", "--runs", "30000", "--seed", "5"};
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "4"});
  EXPECT_EQ(invoke(base).out, invoke(threaded).out);
}

TEST(Classical, GeneratedSeedIsReportedAndReproduces) {
  const auto first = invoke_json({"classical", "--game", "move-game", "--search", "box1", "--mode", "mc",
                                  "--runs", "2000"});
  const auto seed = first.at("monte_carlo").at("seed").get<std::uint64_t>();
  EXPECT_EQ(first.at("parameters").at("seed").get<std::uint64_t>(), seed);
  const auto again = invoke_json({"classical", "--game", "move-game", "--search", "box1", "--mode", "mc",
                                  "--runs", "2000", "--seed", std::to_string(seed)});
  EXPECT_EQ(again.at("monte_carlo"), first.at("monte_carlo"));
}

TEST(Compare, TextTable) {
  const auto r = invoke({"compare"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("1/9 ≈ 0.1111"), std::string::npos) << r.out;
  std::istringstream lines(r.out);
  std::string line;
  std::map<std::string, std::string> first_value;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string system, value;
    cells >> system >> value;
    first_value[system] = value;
  }
  EXPECT_EQ(first_value.at("kirkpatrick"), "0");
  EXPECT_EQ(first_value.at("leifer-spekkens"), "0");
  EXPECT_EQ(first_value.at("move-game"), "2/3");
  EXPECT_EQ(first_value.at("simplified"), "1/3");
  EXPECT_EQ(first_value.at("three-box"), "1/9");
}

TEST(Compare, GoldenJson) {
  const auto r = invoke({"compare", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto golden = ordered_json::parse(read_file(std::filesystem::path(THREEBOX_GOLDEN_DIR) / "compare.json"));
  const auto actual = ordered_json::parse(r.out);
  ASSERT_EQ(actual.size(), golden.size());
  EXPECT_EQ(actual.at("scenario"), golden.at("scenario"));
  EXPECT_EQ(actual.at("parameters"), golden.at("parameters"));
  EXPECT_EQ(actual.at("monte_carlo"), golden.at("monte_carlo"));
  // Key order and rational strings must match exactly; decimals to 1e-15.
  const auto& a = actual.at("exact");
  const auto& g = golden.at("exact");
  ASSERT_EQ(a.size(), g.size());
  auto ai = a.items().begin();
  for (const auto& [key, value] : g.items()) {
    EXPECT_EQ(ai.key(), key);
    if (value.is_string()) {
      EXPECT_EQ(ai.value(), value) << key;
    } else {
      EXPECT_NEAR(ai.value().get<double>(), value.get<double>(), 1e-15) << key;
    }
    ++ai;
  }
  EXPECT_EQ(g.at("kirkpatrick.post_without_measurement"), "0");
  EXPECT_EQ(g.at("leifer-spekkens.post_with_measurement"), "1/4");
}

TEST(Document, JsonRoundTripIsExact) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"quantum", "--measure", "B", "--mode", "mc", "--runs", "3000", "--seed", "9"},
           {"classical", "--game", "kirkpatrick", "--search", "D", "--mode", "mc", "--runs", "3000", "--seed", "1"},
           {"classical", "--game", "simplified", "--search", "S", "--variant", "literal"},
           {"compare", "--format", "json"},
           {"weak", "--coupling", "0.01", "--coupling", "1"}}) {
    const auto j = invoke_json(args);
    const auto doc = from_json(j);
    EXPECT_EQ(to_json(doc), j);
    EXPECT_EQ(from_json(ordered_json::parse(to_json(doc).dump())), doc);
  }
}

TEST(Document, RationalsAreInLowestTerms) {
  for (const char* game : {"kirkpatrick", "simplified", "leifer-spekkens", "move-game"}) {
    const char* search = std::string(game) == "leifer-spekkens" ? "right"
                         : std::string(game) == "move-game"     ? "box2"
                                                                : "S";
    const auto j = invoke_json({"classical", "--game", game, "--search", search});
    for (const auto& [key, value] : j.at("exact").items()) {
      ASSERT_TRUE(value.is_string()) << key;
      const auto r = parse_rational(value.get<std::string>());
      EXPECT_EQ(to_string(r), value.get<std::string>()) << key;
    }
  }
}

TEST(Document, SchemaViolationsAreRejected) {
  EXPECT_THROW(from_json(ordered_json::parse(R"({"scenario":"x","parameters":{},"exact":{}})")),
               std::invalid_argument);
  EXPECT_THROW(
      from_json(ordered_json::parse(R"({"scenario":"x","parameters":{},"exact":{"p":[1]},"monte_carlo":null})")),
      std::invalid_argument);
  EXPECT_THROW(
      from_json(ordered_json::parse(R"({"scenario":"x","parameters":{},"exact":{"p":"1/0"},"monte_carlo":null})")),
      std::invalid_argument);
}

TEST(Output, CsvHasOneRowPerEvent) {
  const auto r = invoke({"classical", "--game", "move-game", "--search", "box1", "--mode", "mc", "--runs", "1000",
                         "--seed", "3", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "event,exact,frequency,ci_low,ci_high");
  std::set<std::string> events;
  while (std::getline(lines, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 4) << line;
    events.insert(line.substr(0, line.find(',')));
  }
  EXPECT_EQ(events, (std::set<std::string>{"found_and_post", "found_and_rejected", "not_found_and_post",
                                           "not_found_and_rejected", "p_post", "found_given_post"}));
  EXPECT_NE(r.out.find("p_post,1/3,"), std::string::npos);
}

TEST(Output, TextFormatAndOutFile) {
  const auto text = invoke({"classical", "--game", "kirkpatrick", "--search", "S", "--format", "text"});
  EXPECT_NE(text.out.find("scenario: kirkpatrick"), std::string::npos);
  EXPECT_NE(text.out.find("1/8"), std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "threebox_cli_test_out.json";
  std::filesystem::remove(path);
  const auto r = invoke({"classical", "--game", "move-game", "--search", "none", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  const auto j = ordered_json::parse(read_file(path));
  EXPECT_EQ(j.at("exact").at("p_post"), "2/3");
  std::filesystem::remove(path);

  const auto bad = invoke({"compare", "--out", "/nonexistent-dir/x.txt"});
  EXPECT_EQ(bad.code, kExitInternal);
}

TEST(Weak, SweepApproachesWeakValue) {
  const auto j = invoke_json({"weak", "--coupling", "0.01", "--coupling", "1", "--sigma", "1"});
  const auto& e = j.at("exact");
  EXPECT_NEAR(e.at("weak_value_C").get<double>(), -1.0, 1e-12);
  EXPECT_NEAR(e.at("meter_mean_over_g_C[g=0.01]").get<double>(), -1.0, 0.01);
  EXPECT_NEAR(e.at("meter_mean_over_g_A[g=0.01]").get<double>(), 1.0, 0.01);
  EXPECT_TRUE(e.contains("meter_mean_B[g=1]"));
  EXPECT_EQ(invoke({"weak", "--measure", "D"}).code, kExitUsage);
  EXPECT_EQ(invoke({"weak", "--sigma", "0"}).code, kExitUsage);
}

TEST(Bob, ScriptedSessionNeverWinsAKeptRound) {
  const auto r = invoke({"bob", "--rounds", "200", "--seed", "17"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("non-interactive"), std::string::npos);
  EXPECT_NE(r.out.find("your wins among kept rounds: 0"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("loss rate among kept rounds: 100%"), std::string::npos) << r.out;
  EXPECT_EQ(r.out, invoke({"bob", "--rounds", "200", "--seed", "17"}).out);
}

TEST(Bob, InteractiveChoicesThenEndOfInput) {
  const auto r = invoke({"bob", "--rounds", "6", "--seed", "1"}, "A\nx\nb\n", true);
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("round 1: opened A"), std::string::npos);
  EXPECT_NE(r.out.find("please answer A or B"), std::string::npos);
  EXPECT_NE(r.out.find("round 2: opened B"), std::string::npos);
  EXPECT_NE(r.out.find("input closed"), std::string::npos);
  EXPECT_NE(r.out.find("your wins among kept rounds: 0"), std::string::npos);
}

TEST(Bob, ZeroRounds) {
  const auto r = invoke({"bob", "--rounds", "0", "--seed", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("no rounds played"), std::string::npos);
}

TEST(Binary, EndToEnd) {
  const std::string cmd = std::string(THREEBOX_TOOL) + " classical --game kirkpatrick --search D 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  ASSERT_TRUE(pipe);
  std::string out;
  std::array<char, 256> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
  EXPECT_EQ(ordered_json::parse(out).at("exact").at("p_post"), "1/8");

  const std::string bad = std::string(THREEBOX_TOOL) + " quantum --measure up >/dev/null 2>&1";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), kExitUsage);
}

}  // namespace
}  // namespace threebox::cli
