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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "threebox/harness.hpp"
#include "threebox/probability.hpp"

namespace threebox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact classical values are rationals ("p/q" on the wire); quantum values
/// are decimals.
using ExactValue = std::variant<Rational, double>;

ExactValue to_exact_value(const Probability& p);

struct MonteCarloEntry {
  std::string event;
  std::uint64_t count = 0;
  double frequency = 0.0;
  harness::Interval ci95;

  friend bool operator==(const MonteCarloEntry&, const MonteCarloEntry&) = default;
};

struct MonteCarloSection {
  std::uint64_t runs = 0;
  std::uint64_t seed = 0;
  std::vector<MonteCarloEntry> entries;

  friend bool operator==(const MonteCarloSection&, const MonteCarloSection&) = default;
};

struct OutputDocument {
  std::string scenario;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, ExactValue>> exact;
  std::optional<MonteCarloSection> monte_carlo;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

/// Exact entries for every event class plus p_post and found_given_post.
void add_exact(OutputDocument& doc, const harness::ExactDistribution& dist);
MonteCarloSection to_section(const harness::RunStatistics& stats);

/// {scenario, parameters, exact, monte_carlo}; monte_carlo is null when
/// absent. counts, frequencies and ci95 are objects keyed by event.
nlohmann::ordered_json to_json(const OutputDocument& doc);
/// Inverse of to_json. Throws std::invalid_argument on schema violations.
OutputDocument from_json(const nlohmann::ordered_json& j);

/// Header "event,exact,frequency,ci_low,ci_high", one row per event.
std::string to_csv(const OutputDocument& doc);
std::string to_text(const OutputDocument& doc);

OutputDocument compare_document(const std::vector<harness::DiscriminatorRow>& rows);
/// Aligned table: system, P(post | no measurement), P(post | measurement),
/// P(found | post).
std::string compare_table(const std::vector<harness::DiscriminatorRow>& rows);

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  /// Whether `in` is a terminal; the bob demo scripts Bob's choices otherwise.
  bool interactive = false;
};

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 on success, 2 on usage errors, 1 on internal errors.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace threebox::cli
