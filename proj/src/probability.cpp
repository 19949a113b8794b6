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

#include "threebox/probability.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace threebox {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    if (used != s.size()) throw std::invalid_argument("malformed rational: '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::optional<Rational> nearest_fraction(double value, std::int64_t max_denominator,
                                         double tolerance) {
  if (!std::isfinite(value)) return std::nullopt;
  // Convergents h/k of the continued fraction expansion.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(value));
  std::int64_t k_prev = 0, k = 1;
  double rest = value - std::floor(value);
  while (true) {
    if (std::abs(value - static_cast<double>(h) / static_cast<double>(k)) <= tolerance) {
      return Rational(h, k);
    }
    if (rest < 1e-15) break;
    const double inv = 1.0 / rest;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    rest = inv - std::floor(inv);
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    const std::int64_t h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

std::string Probability::describe() const {
  if (exact) return to_string(*exact);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string out = buf;
  if (auto approx = nearest_fraction(value)) out += " (~" + to_string(*approx) + ")";
  return out;
}

Probability operator+(const Probability& a, const Probability& b) {
  if (a.exact && b.exact) return Probability(*a.exact + *b.exact);
  return Probability(a.value + b.value);
}

Probability operator*(const Probability& a, const Probability& b) {
  if (a.exact && b.exact) return Probability(*a.exact * *b.exact);
  return Probability(a.value * b.value);
}

Probability operator/(const Probability& a, const Probability& b) {
  if (b.is_zero()) throw std::domain_error("conditional on a zero-probability event");
  if (a.exact && b.exact) return Probability(*a.exact / *b.exact);
  return Probability(a.value / b.value);
}

Probability complement(const Probability& p) {
  if (p.exact) return Probability(Rational(1) - *p.exact);
  return Probability(1.0 - p.value);
}

}  // namespace threebox
