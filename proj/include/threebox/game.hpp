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

#include <cstddef>
#include <optional>

#include "threebox/rng.hpp"

namespace threebox {

/// Outcome of one play: the intermediate yes/no result (absent when no
/// intermediate measurement was made) and whether post-selection succeeded.
struct GameRecord {
  std::optional<bool> found;
  bool post_success = false;

  friend bool operator==(const GameRecord&, const GameRecord&) = default;
};

/// Uniform choice among n alternatives. Games written against this
/// interface can be both sampled and exhaustively enumerated.
class Chance {
 public:
  virtual ~Chance() = default;
  virtual std::size_t pick(std::size_t n) = 0;
};

/// Index k is chosen iff k/n <= u < (k+1)/n.
std::size_t pick_index(double u, std::size_t n);

class SampledChance final : public Chance {
 public:
  explicit SampledChance(UniformSource& source) : source_(source) {}
  std::size_t pick(std::size_t n) override { return pick_index(source_.uniform(), n); }

 private:
  UniformSource& source_;
};

}  // namespace threebox
