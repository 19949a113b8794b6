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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "threebox/classical.hpp"
#include "threebox/game.hpp"
#include "threebox/probability.hpp"
#include "threebox/scenarios.hpp"

namespace threebox::harness {

/// Classes of GameRecord: intermediate result × post-selection.
enum class Event : std::uint8_t {
  FoundPost,
  FoundRejected,
  MissedPost,
  MissedRejected,
  UnmeasuredPost,
  UnmeasuredRejected,
};

inline constexpr std::array<Event, 6> kAllEvents{
    Event::FoundPost,  Event::FoundRejected,  Event::MissedPost,
    Event::MissedRejected, Event::UnmeasuredPost, Event::UnmeasuredRejected};

Event classify(const GameRecord& r);
std::string_view event_name(Event e);

struct Outcome {
  GameRecord record;
  Probability probability;
};

/// A finite stochastic game that can be enumerated exactly and sampled.
/// Implementations must be safe to sample concurrently.
class GameModel {
 public:
  virtual ~GameModel() = default;
  virtual std::string name() const = 0;
  /// Whether a play includes the intermediate yes/no measurement.
  virtual bool measures() const = 0;
  /// Leaves of the randomness tree; probabilities sum to one.
  virtual std::vector<Outcome> enumerate() const = 0;
  virtual GameRecord sample(UniformSource& randomness) const = 0;
};

/// One root-to-leaf path of a game written against Chance.
struct ChancePath {
  std::vector<std::size_t> choices;
  std::vector<std::size_t> arities;
  GameRecord record;
  Rational probability;
};

/// Wraps a play function that draws all its randomness through Chance::pick.
/// Enumeration replays the function once per path of the choice tree, with
/// exact rational weights.
class ChanceGame final : public GameModel {
 public:
  using Play = std::function<GameRecord(Chance&)>;

  ChanceGame(std::string name, bool measures, Play play)
      : name_(std::move(name)), measures_(measures), play_(std::move(play)) {}

  std::string name() const override { return name_; }
  bool measures() const override { return measures_; }
  std::vector<Outcome> enumerate() const override;
  GameRecord sample(UniformSource& randomness) const override;

  std::vector<ChancePath> paths() const;

 private:
  std::string name_;
  bool measures_;
  Play play_;
};

/// Quantum scenario with an optional intermediate projector. Enumeration goes
/// through twostate::enumerate_sequence, sampling through quantum_round.
class QuantumGame final : public GameModel {
 public:
  QuantumGame(scenarios::ScenarioId scenario, std::optional<std::string> measurement);

  std::string name() const override;
  bool measures() const override { return measurement_.has_value(); }
  std::vector<Outcome> enumerate() const override;
  GameRecord sample(UniformSource& randomness) const override;

 private:
  scenarios::ScenarioSystem system_;
  std::optional<std::string> measurement_;
};

std::unique_ptr<GameModel> make_quantum_game(scenarios::ScenarioId scenario,
                                             std::optional<std::string> measurement);
std::unique_ptr<GameModel> make_alice_bob_game(scenarios::BobStrategy strategy);
std::unique_ptr<ChanceGame> make_kirkpatrick_game(std::optional<classical::Suit> search);
std::unique_ptr<ChanceGame> make_simplified_game(std::optional<classical::Suit> search,
                                                 classical::SimplifiedVariant variant);
std::unique_ptr<ChanceGame> make_leifer_spekkens_game(std::optional<classical::Side> search);
std::unique_ptr<ChanceGame> make_move_game(std::optional<classical::Box> observe,
                                           classical::MoveGameConfig config = {});

struct ExactDistribution {
  /// The four measured classes, or the two unmeasured ones.
  std::map<Event, Probability> events;
  Probability p_post;
  /// Absent when post-selection is impossible or nothing was measured.
  std::optional<Probability> found_given_post;

  friend bool operator==(const ExactDistribution&, const ExactDistribution&) = default;
};

ExactDistribution enumerate_exact(const GameModel& game);

struct Interval {
  double low = 0.0;
  double high = 1.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Wilson score interval at 95% (z = 1.959963984540054), clipped to [0, 1].
Interval wilson95(std::uint64_t successes, std::uint64_t trials);

struct Frequency {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double value = 0.0;
  Interval ci95;
  friend bool operator==(const Frequency&, const Frequency&) = default;
};

Frequency make_frequency(std::uint64_t successes, std::uint64_t trials);

struct RunStatistics {
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;
  std::map<Event, std::uint64_t> counts;
  std::map<Event, Frequency> frequencies;
  Frequency post;
  /// Over post-selected runs only; absent when no run was post-selected or
  /// nothing was measured.
  std::optional<Frequency> found_given_post;
  ExactDistribution exact;

  friend bool operator==(const RunStatistics&, const RunStatistics&) = default;
};

/// Run i draws from VariateStream(seed, i), so the result depends only on
/// (game, runs, seed). `workers` > 1 splits runs across threads.
RunStatistics monte_carlo(const GameModel& game, std::uint64_t runs, std::uint64_t seed,
                          unsigned workers = 1);

struct DiscriminatorRow {
  std::string system;
  Probability post_without_measurement;
  Probability post_with_measurement;
  Probability found_given_post;
};

/// Quantum Three-Box (box A), Kirkpatrick (S), simplified faithful (S),
/// Leifer-Spekkens (left), move game (box 1).
std::vector<DiscriminatorRow> discriminator_table();

}  // namespace threebox::harness
