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

#include "threebox/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace threebox {

std::size_t pick_index(double u, std::size_t n) {
  if (n == 0) throw std::invalid_argument("pick from an empty set");
  const auto k = static_cast<std::size_t>(u * static_cast<double>(n));
  return std::min(k, n - 1);
}

}  // namespace threebox
