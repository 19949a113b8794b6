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

#include "threebox/classical.hpp"

#include <algorithm>
#include <numeric>

namespace threebox::classical {

namespace {

const Card& draw(const std::vector<Card>& pool, Chance& chance, const char* pile) {
  if (pool.empty()) throw ProtocolError(std::string("cannot draw from empty pile ") + pile);
  return pool[chance.pick(pool.size())];
}

void sort_by_id(std::vector<Card>& pile) {
  std::sort(pile.begin(), pile.end(), [](const Card& a, const Card& b) { return a.id < b.id; });
}

DeckState split(const std::vector<Card>& deck, Variable memory, auto&& goes_to_these) {
  DeckState s{{}, {}, memory};
  for (const auto& c : deck) (goes_to_these(c) ? s.these : s.others).push_back(c);
  return s;
}

std::vector<Card> full_deck() {
  const auto& d = six_card_deck();
  return {d.begin(), d.end()};
}

}  // namespace

std::string to_string(Variable v) { return v == Variable::Face ? "Face" : "Suit"; }

std::string to_string(Value v) {
  static constexpr const char* kFaces = "JQK";
  static constexpr const char* kSuits = "SDH";
  return to_string(v.variable) + "=" +
         (v.variable == Variable::Face ? kFaces[v.code] : kSuits[v.code]);
}

std::string to_string(const Card& c) {
  static constexpr const char* kFaces = "JQK";
  static constexpr const char* kSuits = "SDH";
  return {kFaces[static_cast<int>(c.face)], kSuits[static_cast<int>(c.suit)]};
}

const std::array<Card, 6>& six_card_deck() {
  static const std::array<Card, 6> deck{{{Face::J, Suit::S, 0},
                                         {Face::J, Suit::D, 1},
                                         {Face::Q, Suit::S, 2},
                                         {Face::Q, Suit::D, 3},
                                         {Face::K, Suit::H, 4},
                                         {Face::K, Suit::H, 5}}};
  return deck;
}

bool conserves_deck(const DeckState& s) {
  std::vector<Card> all = s.these;
  all.insert(all.end(), s.others.begin(), s.others.end());
  sort_by_id(all);
  return all == full_deck();
}

DeckState k_prepare(Value value) {
  return split(full_deck(), value.variable, [&](const Card& c) { return c.has(value); });
}

DeckState k_prepare_not(Value value) {
  return split(full_deck(), value.variable, [&](const Card& c) { return !c.has(value); });
}

Observation k_observe(const DeckState& state, Variable variable, Chance& chance) {
  if (state.memory == variable) {
    const Card& c = draw(state.these, chance, "These");
    return {Value{variable, c.code(variable)}, state};
  }
  const Card& c = draw(state.others, chance, "Others");
  const Value reported{variable, c.code(variable)};
  return {reported, k_prepare(reported)};
}

PartialObservation k_partial_observe(const DeckState& state, Value value, Chance& chance) {
  if (state.memory == value.variable) {
    return {draw(state.these, chance, "These").has(value), state};
  }
  const bool found = draw(state.others, chance, "Others").has(value);
  return {found, found ? k_prepare(value) : k_prepare_not(value)};
}

KirkpatrickTrace trace_kirkpatrick(std::optional<Suit> search, Chance& chance) {
  if (search == Suit::H) throw std::invalid_argument("Kirkpatrick search must be S or D");
  KirkpatrickTrace trace;
  DeckState state = k_prepare(Value::of(Face::Q));
  trace.states.push_back(state);
  if (search) {
    auto partial = k_partial_observe(state, Value::of(*search), chance);
    trace.record.found = partial.found;
    state = std::move(partial.state);
    trace.states.push_back(state);
  }
  auto final_look = k_observe(state, Variable::Face, chance);
  trace.states.push_back(final_look.state);
  trace.record.post_success = final_look.reported == Value::of(Face::K);
  return trace;
}

GameRecord run_kirkpatrick(std::optional<Suit> search, Chance& chance) {
  return trace_kirkpatrick(search, chance).record;
}

std::string_view to_string(SimplifiedVariant v) {
  return v == SimplifiedVariant::Faithful ? "faithful" : "literal";
}

GameRecord run_simplified(std::optional<Suit> search, SimplifiedVariant variant, Chance& chance) {
  if (search == Suit::H) throw std::invalid_argument("simplified-game search must be S or D");
  const std::vector<Card> deck{{Face::J, Suit::S, 0}, {Face::J, Suit::D, 1}, {Face::K, Suit::H, 2}};
  std::vector<Card> these;
  std::vector<Card> others = deck;
  GameRecord record;
  if (search) {
    const Card drawn = draw(others, chance, "Others");
    const bool found = drawn.suit == *search;
    record.found = found;
    these.clear();
    others.clear();
    if (found) {
      for (const auto& c : deck) (c == drawn ? these : others).push_back(c);
    } else if (variant == SimplifiedVariant::Faithful) {
      for (const auto& c : deck) (c.suit == *search ? others : these).push_back(c);
    } else {
      for (const auto& c : deck) (c == drawn ? others : these).push_back(c);
    }
  }
  record.post_success = draw(others, chance, "Others").face == Face::K;
  return record;
}

std::string_view to_string(Side s) { return s == Side::Left ? "left" : "right"; }

SideLook look_side(const BallBoxState& state, Side search, Chance& chance) {
  if (state.side != search) return {false, state};
  const Depth depth = chance.pick(2) == 0 ? Depth::Front : Depth::Back;
  return {true, {depth, state.side}};
}

GameRecord run_leifer_spekkens(std::optional<Side> search, Chance& chance) {
  BallBoxState ball{Depth::Front, chance.pick(2) == 0 ? Side::Left : Side::Right};
  GameRecord record;
  if (search) {
    auto look = look_side(ball, *search, chance);
    record.found = look.found;
    ball = look.state;
  }
  record.post_success = ball.depth == Depth::Back;
  return record;
}

std::string_view to_string(Box b) {
  switch (b) {
    case Box::Box1: return "box1";
    case Box::Box2: return "box2";
    case Box::Box3: return "box3";
  }
  return "?";
}

GameRecord run_move_game(std::optional<Box> observe, Chance& chance, const MoveGameConfig& config) {
  if (observe == Box::Box3) throw std::invalid_argument("move game observes Box1 or Box2");
  const auto& w = config.initial_weights;
  const unsigned total = std::accumulate(w.begin(), w.end(), 0U);
  if (total == 0) throw std::invalid_argument("move game initial weights sum to zero");
  // Weighted initial location via a uniform pick over total weight units.
  std::size_t unit = chance.pick(total);
  std::size_t index = 0;
  while (unit >= w[index]) unit -= w[index++];
  ThreeBoxBallState ball{static_cast<Box>(index)};
  GameRecord record;
  if (observe) {
    record.found = ball.location == *observe;
    if (!*record.found) ball.location = Box::Box3;
  }
  record.post_success = ball.location != Box::Box3;
  return record;
}

}  // namespace threebox::classical
