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

#include "threebox/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace threebox::harness {

Event classify(const GameRecord& r) {
  if (!r.found) return r.post_success ? Event::UnmeasuredPost : Event::UnmeasuredRejected;
  if (*r.found) return r.post_success ? Event::FoundPost : Event::FoundRejected;
  return r.post_success ? Event::MissedPost : Event::MissedRejected;
}

std::string_view event_name(Event e) {
  switch (e) {
    case Event::FoundPost: return "found_and_post";
    case Event::FoundRejected: return "found_and_rejected";
    case Event::MissedPost: return "not_found_and_post";
    case Event::MissedRejected: return "not_found_and_rejected";
    case Event::UnmeasuredPost: return "unmeasured_and_post";
    case Event::UnmeasuredRejected: return "unmeasured_and_rejected";
  }
  return "?";
}

namespace {

/// Follows a fixed choice prefix, then always takes choice 0, recording the
/// arity of every pick.
class ReplayChance final : public Chance {
 public:
  explicit ReplayChance(const std::vector<std::size_t>& prefix) : prefix_(prefix) {}

  std::size_t pick(std::size_t n) override {
    if (n == 0) throw std::invalid_argument("pick from an empty set");
    const std::size_t pos = choices_.size();
    const std::size_t c = pos < prefix_.size() ? prefix_[pos] : 0;
    if (c >= n) throw std::logic_error("replayed choice out of range: game is not deterministic");
    choices_.push_back(c);
    arities_.push_back(n);
    return c;
  }

  std::vector<std::size_t> take_choices() { return std::move(choices_); }
  std::vector<std::size_t> take_arities() { return std::move(arities_); }

 private:
  const std::vector<std::size_t>& prefix_;
  std::vector<std::size_t> choices_;
  std::vector<std::size_t> arities_;
};

}  // namespace

std::vector<ChancePath> ChanceGame::paths() const {
  std::vector<ChancePath> out;
  std::vector<std::vector<std::size_t>> pending{{}};
  while (!pending.empty()) {
    const auto prefix = std::move(pending.back());
    pending.pop_back();
    ReplayChance chance(prefix);
    ChancePath path;
    path.record = play_(chance);
    path.choices = chance.take_choices();
    path.arities = chance.take_arities();
    if (path.choices.size() < prefix.size()) {
      throw std::logic_error("replayed game consumed fewer choices than its prefix");
    }
    path.probability = 1;
    for (const auto n : path.arities) path.probability /= static_cast<std::int64_t>(n);
    // Siblings of every choice taken by default, pushed in reverse so paths
    // come out in lexicographic order.
    for (std::size_t i = prefix.size(); i < path.choices.size(); ++i) {
      for (std::size_t alt = path.arities[i]; alt-- > 1;) {
        std::vector<std::size_t> next(path.choices.begin(), path.choices.begin() + i);
        next.push_back(alt);
        pending.push_back(std::move(next));
      }
    }
    out.push_back(std::move(path));
  }
  return out;
}

std::vector<Outcome> ChanceGame::enumerate() const {
  std::vector<Outcome> out;
  for (auto& p : paths()) out.push_back({p.record, Probability(p.probability)});
  return out;
}

GameRecord ChanceGame::sample(UniformSource& randomness) const {
  SampledChance chance(randomness);
  return play_(chance);
}

QuantumGame::QuantumGame(scenarios::ScenarioId scenario, std::optional<std::string> measurement)
    : system_(scenarios::build(scenario)), measurement_(std::move(measurement)) {
  if (measurement_) (void)system_.projector(*measurement_);
}

std::string QuantumGame::name() const {
  return std::string(scenarios::to_string(system_.id)) + "/" +
         (measurement_ ? *measurement_ : std::string("none"));
}

std::vector<Outcome> QuantumGame::enumerate() const {
  std::vector<hilbert::Projector> sequence;
  if (measurement_) sequence.push_back(system_.projector(*measurement_));
  const auto dist = twostate::enumerate_sequence(system_.tsv, sequence);
  std::vector<Outcome> out;
  for (const auto& b : dist.branches()) {
    std::optional<bool> found;
    if (!b.outcomes.empty()) found = b.outcomes.front();
    out.push_back({{found, true}, Probability(b.joint * b.post_selection)});
    out.push_back({{found, false}, Probability(b.joint * (1.0 - b.post_selection))});
  }
  return out;
}

GameRecord QuantumGame::sample(UniformSource& randomness) const {
  const hilbert::Projector* p = measurement_ ? &system_.projector(*measurement_) : nullptr;
  const auto round = scenarios::quantum_round(system_, p, randomness);
  return {round.bob_found, round.post_selected};
}

std::unique_ptr<GameModel> make_quantum_game(scenarios::ScenarioId scenario,
                                             std::optional<std::string> measurement) {
  return std::make_unique<QuantumGame>(scenario, std::move(measurement));
}

std::unique_ptr<GameModel> make_alice_bob_game(scenarios::BobStrategy strategy) {
  std::optional<std::string> box;
  if (strategy == scenarios::BobStrategy::OpenA) box = "A";
  if (strategy == scenarios::BobStrategy::OpenB) box = "B";
  return make_quantum_game(scenarios::ScenarioId::ThreeBox, box);
}

std::unique_ptr<ChanceGame> make_kirkpatrick_game(std::optional<classical::Suit> search) {
  if (search == classical::Suit::H) throw std::invalid_argument("Kirkpatrick search must be S or D");
  return std::make_unique<ChanceGame>(
      "kirkpatrick", search.has_value(),
      [search](Chance& c) { return classical::run_kirkpatrick(search, c); });
}

std::unique_ptr<ChanceGame> make_simplified_game(std::optional<classical::Suit> search,
                                                 classical::SimplifiedVariant variant) {
  if (search == classical::Suit::H) throw std::invalid_argument("simplified search must be S or D");
  return std::make_unique<ChanceGame>(
      "simplified-" + std::string(classical::to_string(variant)), search.has_value(),
      [search, variant](Chance& c) { return classical::run_simplified(search, variant, c); });
}

std::unique_ptr<ChanceGame> make_leifer_spekkens_game(std::optional<classical::Side> search) {
  return std::make_unique<ChanceGame>(
      "leifer-spekkens", search.has_value(),
      [search](Chance& c) { return classical::run_leifer_spekkens(search, c); });
}

std::unique_ptr<ChanceGame> make_move_game(std::optional<classical::Box> observe,
                                           classical::MoveGameConfig config) {
  if (observe == classical::Box::Box3) throw std::invalid_argument("move game observes box1 or box2");
  return std::make_unique<ChanceGame>(
      "move-game", observe.has_value(),
      [observe, config](Chance& c) { return classical::run_move_game(observe, c, config); });
}

ExactDistribution enumerate_exact(const GameModel& game) {
  const auto outcomes = game.enumerate();
  const bool exact = std::all_of(outcomes.begin(), outcomes.end(),
                                 [](const Outcome& o) { return o.probability.is_exact(); });
  const Probability zero = exact ? Probability::zero() : Probability(0.0);

  ExactDistribution dist;
  if (game.measures()) {
    for (auto e : {Event::FoundPost, Event::FoundRejected, Event::MissedPost, Event::MissedRejected}) {
      dist.events[e] = zero;
    }
  } else {
    dist.events[Event::UnmeasuredPost] = zero;
    dist.events[Event::UnmeasuredRejected] = zero;
  }
  for (const auto& o : outcomes) {
    auto& slot = dist.events[classify(o.record)];
    slot = slot + o.probability;
  }
  dist.p_post = zero;
  for (const auto& [event, p] : dist.events) {
    if (event == Event::FoundPost || event == Event::MissedPost || event == Event::UnmeasuredPost) {
      dist.p_post = dist.p_post + p;
    }
  }
  if (game.measures() && !dist.p_post.is_zero()) {
    dist.found_given_post = dist.events[Event::FoundPost] / dist.p_post;
  }
  return dist;
}

Interval wilson95(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::clamp(std::min(center - half, p), 0.0, 1.0),
          std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

Frequency make_frequency(std::uint64_t successes, std::uint64_t trials) {
  Frequency f;
  f.successes = successes;
  f.trials = trials;
  f.value = trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  f.ci95 = wilson95(successes, trials);
  return f;
}

namespace {

using Tally = std::array<std::uint64_t, kAllEvents.size()>;

Tally sample_range(const GameModel& game, std::uint64_t seed, std::uint64_t begin,
                   std::uint64_t end) {
  Tally t{};
  for (std::uint64_t i = begin; i < end; ++i) {
    VariateStream stream(seed, i);
    ++t[static_cast<std::size_t>(classify(game.sample(stream)))];
  }
  return t;
}

}  // namespace

RunStatistics monte_carlo(const GameModel& game, std::uint64_t runs, std::uint64_t seed,
                          unsigned workers) {
  if (runs == 0) throw std::invalid_argument("monte_carlo needs at least one run");
  workers = std::max(1U, workers);
  if (workers > runs) workers = static_cast<unsigned>(runs);

  Tally total{};
  if (workers == 1) {
    total = sample_range(game, seed, 0, runs);
  } else {
    std::vector<Tally> partial(workers);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (runs + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(runs, w * chunk);
      const std::uint64_t end = std::min(runs, begin + chunk);
      threads.emplace_back([&, w, begin, end] { partial[w] = sample_range(game, seed, begin, end); });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : partial) {
      for (std::size_t i = 0; i < total.size(); ++i) total[i] += p[i];
    }
  }

  RunStatistics stats;
  stats.runs = runs;
  stats.seed = seed;
  stats.exact = enumerate_exact(game);
  for (const auto& [event, _] : stats.exact.events) {
    stats.counts[event] = total[static_cast<std::size_t>(event)];
  }
  // Any sampled class outside the enumerated support still gets reported.
  for (const auto e : kAllEvents) {
    if (total[static_cast<std::size_t>(e)] > 0) stats.counts[e] = total[static_cast<std::size_t>(e)];
  }
  for (const auto& [event, count] : stats.counts) stats.frequencies[event] = make_frequency(count, runs);

  const auto count = [&](Event e) { return total[static_cast<std::size_t>(e)]; };
  const std::uint64_t post =
      count(Event::FoundPost) + count(Event::MissedPost) + count(Event::UnmeasuredPost);
  stats.post = make_frequency(post, runs);
  if (game.measures() && post > 0) stats.found_given_post = make_frequency(count(Event::FoundPost), post);
  return stats;
}

std::vector<DiscriminatorRow> discriminator_table() {
  using classical::Side;
  using classical::Suit;
  struct Pair {
    std::string system;
    std::unique_ptr<GameModel> without;
    std::unique_ptr<GameModel> with;
  };
  std::vector<Pair> games;
  games.push_back({"three-box", make_alice_bob_game(scenarios::BobStrategy::Skip),
                   make_alice_bob_game(scenarios::BobStrategy::OpenA)});
  games.push_back({"kirkpatrick", make_kirkpatrick_game(std::nullopt), make_kirkpatrick_game(Suit::S)});
  games.push_back({"simplified", make_simplified_game(std::nullopt, classical::SimplifiedVariant::Faithful),
                   make_simplified_game(Suit::S, classical::SimplifiedVariant::Faithful)});
  games.push_back({"leifer-spekkens", make_leifer_spekkens_game(std::nullopt),
                   make_leifer_spekkens_game(Side::Left)});
  games.push_back({"move-game", make_move_game(std::nullopt), make_move_game(classical::Box::Box1)});

  std::vector<DiscriminatorRow> rows;
  for (const auto& g : games) {
    const auto without = enumerate_exact(*g.without);
    const auto with = enumerate_exact(*g.with);
    if (!with.found_given_post) throw std::logic_error(g.system + ": post-selection impossible");
    rows.push_back({g.system, without.p_post, with.p_post, *with.found_given_post});
  }
  return rows;
}

}  // namespace threebox::harness
