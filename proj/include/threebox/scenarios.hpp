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

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "threebox/game.hpp"
#include "threebox/twostate.hpp"

namespace threebox::scenarios {

enum class ScenarioId { ThreeBox, SpinBox };

std::string_view to_string(ScenarioId id);

struct ScenarioSystem {
  ScenarioId id;
  twostate::TwoStateVector tsv;
  /// ThreeBox: "A", "B", "C". SpinBox: "up" (A↑), "down" (A↓).
  std::map<std::string, hilbert::Projector> projectors;

  const hilbert::Projector& projector(const std::string& name) const;
};

/// Particle in three boxes: |ψ⟩ = (|A⟩+|B⟩+|C⟩)/√3, ⟨φ| = (⟨A|+⟨B|−⟨C|)/√3.
/// Spin in two boxes over (A↑, A↓, B↑, B↓): |ψ⟩ = (1,1,1,0)/√3,
/// ⟨φ| = (1,1,−1,0)/√3.
ScenarioSystem build(ScenarioId id);

enum class BobStrategy { OpenA, OpenB, Skip };

std::string_view to_string(BobStrategy s);

struct RoundResult {
  std::optional<bool> bob_found;  // absent for Skip
  bool post_selected = false;
};

/// Pre-selection, an optional yes/no measurement (one variate), then
/// post-selection accepted with probability |⟨φ|final⟩|² (one variate).
RoundResult quantum_round(const ScenarioSystem& system, const hilbert::Projector* measurement,
                          UniformSource& randomness);

/// One Three-Box round: pre-selection, Bob's look (one variate unless he
/// skips), then Alice accepts with probability |⟨φ|final⟩|² (one variate).
RoundResult alice_bob_round(BobStrategy strategy, UniformSource& randomness);

}  // namespace threebox::scenarios
