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

#include "threebox/rng.hpp"

#include <stdexcept>

namespace threebox {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

VariateStream::VariateStream(std::uint64_t seed, std::uint64_t stream_index)
    : key_(mix64(mix64(seed + kGamma) ^ (stream_index * kGamma + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t VariateStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

double VariateStream::uniform() { return to_unit_interval(next_u64()); }

double ScriptedUniforms::uniform() {
  if (next_ >= variates_.size()) throw std::out_of_range("scripted variates exhausted");
  return variates_[next_++];
}

}  // namespace threebox
