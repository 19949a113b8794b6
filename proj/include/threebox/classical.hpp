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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "threebox/game.hpp"

namespace threebox::classical {

class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Kirkpatrick's card system
// ---------------------------------------------------------------------------

enum class Variable : std::uint8_t { Face, Suit };
enum class Face : std::uint8_t { J, Q, K };
enum class Suit : std::uint8_t { S, D, H };

/// A value of one of the two card variables, e.g. Face=Q or Suit=S.
struct Value {
  Variable variable;
  std::uint8_t code;

  static constexpr Value of(Face f) { return {Variable::Face, static_cast<std::uint8_t>(f)}; }
  static constexpr Value of(Suit s) { return {Variable::Suit, static_cast<std::uint8_t>(s)}; }

  friend bool operator==(const Value&, const Value&) = default;
};

std::string to_string(Variable v);
std::string to_string(Value v);

struct Card {
  Face face;
  Suit suit;
  int id;  // distinguishes the two KH

  std::uint8_t code(Variable v) const {
    return v == Variable::Face ? static_cast<std::uint8_t>(face) : static_cast<std::uint8_t>(suit);
  }
  bool has(Value v) const { return code(v.variable) == v.code; }

  friend bool operator==(const Card&, const Card&) = default;
};

std::string to_string(const Card& c);

/// JS, JD, QS, QD, KH, KH with ids 0..5.
const std::array<Card, 6>& six_card_deck();

/// These/Others piles plus the memory register. Piles are kept sorted by
/// card id, so equal states compare equal.
struct DeckState {
  std::vector<Card> these;
  std::vector<Card> others;
  Variable memory;

  friend bool operator==(const DeckState&, const DeckState&) = default;
};

/// True when these ∪ others is exactly the six-card deck.
bool conserves_deck(const DeckState& s);

/// these = cards with the value, others = the rest, memory = its variable.
DeckState k_prepare(Value value);

/// The state P = ~p: these = cards without the value, others = cards with it.
DeckState k_prepare_not(Value value);

struct Observation {
  Value reported;
  DeckState state;
};

/// Full observation of a variable. Throws ProtocolError on an empty pool.
Observation k_observe(const DeckState& state, Variable variable, Chance& chance);

struct PartialObservation {
  bool found;
  DeckState state;
};

/// Yes/no observation of whether `value` holds. Throws ProtocolError on an
/// empty pool.
PartialObservation k_partial_observe(const DeckState& state, Value value, Chance& chance);

/// Prepare Face=Q, partially observe Suit=search (skipped when absent), then
/// observe Face; post-selection succeeds iff K is reported. `search` must be
/// S or D.
GameRecord run_kirkpatrick(std::optional<Suit> search, Chance& chance);

/// Steps of one Kirkpatrick play, for conservation/stability checks.
struct KirkpatrickTrace {
  std::vector<DeckState> states;
  GameRecord record;
};
KirkpatrickTrace trace_kirkpatrick(std::optional<Suit> search, Chance& chance);

// ---------------------------------------------------------------------------
// Three-card simplification
// ---------------------------------------------------------------------------

/// Faithful re-prepares a negative outcome like Kirkpatrick's rule (non-matching
/// cards to These). LiteralText returns the drawn card to Others and moves the
/// rest to These.
enum class SimplifiedVariant { Faithful, LiteralText };

std::string_view to_string(SimplifiedVariant v);

/// Deck {JS, JD, KH} starts in Others. One card is drawn and tested for
/// `search` (S or D; skipped when absent), the piles are rearranged per the
/// variant, and a final draw from Others must be the KH.
GameRecord run_simplified(std::optional<Suit> search, SimplifiedVariant variant, Chance& chance);

// ---------------------------------------------------------------------------
// Ball and box with front/back and left/right halves
// ---------------------------------------------------------------------------

enum class Depth : std::uint8_t { Front, Back };
enum class Side : std::uint8_t { Left, Right };

struct BallBoxState {
  Depth depth;
  Side side;

  friend bool operator==(const BallBoxState&, const BallBoxState&) = default;
};

std::string_view to_string(Side s);

/// Looking for the ball on one side: a hit re-randomizes depth, a miss
/// leaves the ball undisturbed.
struct SideLook {
  bool found;
  BallBoxState state;
};
SideLook look_side(const BallBoxState& state, Side search, Chance& chance);

/// Pre-selected Front with a uniform side; post-selection requires Back.
GameRecord run_leifer_spekkens(std::optional<Side> search, Chance& chance);

// ---------------------------------------------------------------------------
// Ball moved to the third box when not found
// ---------------------------------------------------------------------------

enum class Box : std::uint8_t { Box1, Box2, Box3 };

std::string_view to_string(Box b);

struct ThreeBoxBallState {
  Box location;
};

struct MoveGameConfig {
  /// Relative integer weights of the initial location.
  std::array<unsigned, 3> initial_weights{1, 1, 1};
};

/// Observes Box1 or Box2 (skipped when absent); a miss moves the ball to
/// Box3. Post-selection requires the ball outside Box3.
GameRecord run_move_game(std::optional<Box> observe, Chance& chance,
                         const MoveGameConfig& config = {});

}  // namespace threebox::classical
