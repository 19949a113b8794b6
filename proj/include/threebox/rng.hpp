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
#include <cstdint>
#include <vector>

namespace threebox {

/// Source of uniform variates in [0, 1).
class UniformSource {
 public:
  virtual ~UniformSource() = default;
  virtual double uniform() = 0;
};

/// Counter-based generator: the k-th variate of stream (seed, index) is a
/// pure function of (seed, index, k). Runs can therefore be sampled in any
/// order, on any number of threads, with bit-identical results.
class VariateStream final : public UniformSource {
 public:
  VariateStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t next_u64();
  double uniform() override;

  std::uint64_t consumed() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Top 53 bits of a 64-bit word as a double in [0, 1).
double to_unit_interval(std::uint64_t bits);

/// Replays a fixed list of variates; throws std::out_of_range when exhausted.
class ScriptedUniforms final : public UniformSource {
 public:
  explicit ScriptedUniforms(std::vector<double> variates) : variates_(std::move(variates)) {}
  double uniform() override;
  std::size_t remaining() const { return variates_.size() - next_; }

 private:
  std::vector<double> variates_;
  std::size_t next_ = 0;
};

}  // namespace threebox
