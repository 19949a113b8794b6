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
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace threebox {

using Rational = boost::rational<std::int64_t>;

/// "p/q" in lowest terms; integers print without a denominator ("0", "1").
std::string to_string(const Rational& r);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

/// Best rational approximation with denominator <= max_denominator, found by
/// continued fractions. Returns nullopt unless it lies within tolerance.
std::optional<Rational> nearest_fraction(double value,
                                         std::int64_t max_denominator = 1000,
                                         double tolerance = 1e-12);

/// A probability that is always available as a double and, for classical
/// games, additionally carried as an exact rational.
struct Probability {
  double value = 0.0;
  std::optional<Rational> exact;

  Probability() = default;
  explicit Probability(double v) : value(v) {}
  explicit Probability(const Rational& r) : value(to_double(r)), exact(r) {}

  static Probability zero() { return Probability(Rational(0)); }
  static Probability one() { return Probability(Rational(1)); }

  bool is_exact() const { return exact.has_value(); }
  bool is_zero() const { return exact ? exact->numerator() == 0 : value == 0.0; }

  /// Exact fraction when known, otherwise the decimal (with a small-fraction
  /// annotation such as "0.111111111111 (~1/9)" when one fits).
  std::string describe() const;

  friend bool operator==(const Probability&, const Probability&) = default;
};

Probability operator+(const Probability& a, const Probability& b);
Probability operator*(const Probability& a, const Probability& b);
/// a / b. Throws std::domain_error when b is zero.
Probability operator/(const Probability& a, const Probability& b);
Probability complement(const Probability& p);

}  // namespace threebox
