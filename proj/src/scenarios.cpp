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

#include "threebox/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace threebox::scenarios {

using hilbert::Basis;
using hilbert::Projector;

std::string_view to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::ThreeBox: return "three-box";
    case ScenarioId::SpinBox: return "spin-box";
  }
  return "?";
}

std::string_view to_string(BobStrategy s) {
  switch (s) {
    case BobStrategy::OpenA: return "A";
    case BobStrategy::OpenB: return "B";
    case BobStrategy::Skip: return "none";
  }
  return "?";
}

const Projector& ScenarioSystem::projector(const std::string& name) const {
  const auto it = projectors.find(name);
  if (it == projectors.end()) {
    throw std::invalid_argument("scenario " + std::string(to_string(id)) +
                                " has no projector '" + name + "'");
  }
  return it->second;
}

ScenarioSystem build(ScenarioId id) {
  switch (id) {
    case ScenarioId::ThreeBox: {
      const Basis basis{"A", "B", "C"};
      twostate::TwoStateVector tsv(hilbert::make_state(basis, {1.0, 1.0, 1.0}),
                                   hilbert::make_costate(basis, {1.0, 1.0, -1.0}));
      return {id,
              std::move(tsv),
              {{"A", Projector(basis, {"A"})},
               {"B", Projector(basis, {"B"})},
               {"C", Projector(basis, {"C"})}}};
    }
    case ScenarioId::SpinBox: {
      const Basis basis{"A↑", "A↓", "B↑", "B↓"};
      twostate::TwoStateVector tsv(hilbert::make_state(basis, {1.0, 1.0, 1.0, 0.0}),
                                   hilbert::make_costate(basis, {1.0, 1.0, -1.0, 0.0}));
      return {id,
              std::move(tsv),
              {{"up", Projector(basis, {"A↑"})}, {"down", Projector(basis, {"A↓"})}}};
    }
  }
  throw std::invalid_argument("unknown scenario");
}

RoundResult quantum_round(const ScenarioSystem& system, const Projector* measurement,
                          UniformSource& randomness) {
  RoundResult result;
  hilbert::StateVector state = system.tsv.pre();
  if (measurement) {
    auto m = hilbert::measure(state, *measurement, randomness.uniform());
    result.bob_found = m.found;
    state = std::move(m.collapsed);
  }
  const double accept = std::norm(hilbert::inner(system.tsv.post(), state));
  result.post_selected = randomness.uniform() < accept;
  return result;
}

RoundResult alice_bob_round(BobStrategy strategy, UniformSource& randomness) {
  static const ScenarioSystem system = build(ScenarioId::ThreeBox);
  switch (strategy) {
    case BobStrategy::OpenA: return quantum_round(system, &system.projector("A"), randomness);
    case BobStrategy::OpenB: return quantum_round(system, &system.projector("B"), randomness);
    case BobStrategy::Skip: break;
  }
  return quantum_round(system, nullptr, randomness);
}

}  // namespace threebox::scenarios
