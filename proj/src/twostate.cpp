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

#include "threebox/twostate.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace threebox::twostate {

TwoStateVector::TwoStateVector(StateVector pre, CoStateVector post)
    : pre_(std::move(pre)), post_(std::move(post)) {
  if (!(pre_.basis() == post_.basis())) {
    throw hilbert::BasisMismatchError("pre- and post-selected states use different bases");
  }
}

BranchDistribution::BranchDistribution(std::vector<Branch> branches)
    : branches_(std::move(branches)) {
  for (const auto& b : branches_) p_post_ += b.joint * b.post_selection;
}

double BranchDistribution::total_joint() const {
  return std::accumulate(branches_.begin(), branches_.end(), 0.0,
                         [](double acc, const Branch& b) { return acc + b.joint; });
}

double BranchDistribution::conditional(const std::vector<bool>& outcomes) const {
  if (p_post_ <= 0.0) throw PostSelectionImpossible();
  for (const auto& b : branches_) {
    if (b.outcomes == outcomes) return b.joint * b.post_selection / p_post_;
  }
  throw std::invalid_argument("no branch with the requested outcome sequence");
}

namespace {

void walk(const TwoStateVector& tsv, std::span<const Projector> measurements,
          std::vector<bool>& path, double weight, const std::optional<StateVector>& state,
          std::vector<Branch>& out) {
  if (path.size() == measurements.size()) {
    Branch leaf{path, weight, 0.0, state};
    if (state) leaf.post_selection = std::norm(hilbert::inner(tsv.post(), *state));
    out.push_back(std::move(leaf));
    return;
  }
  const Projector& p = measurements[path.size()];
  for (const bool found : {true, false}) {
    std::optional<StateVector> next;
    double w = 0.0;
    if (state) {
      auto split = hilbert::project(*state, found ? p : p.complement());
      w = split.probability;
      next = std::move(split.collapsed);
    }
    path.push_back(found);
    walk(tsv, measurements, path, weight * w, next, out);
    path.pop_back();
  }
}

}  // namespace

BranchDistribution enumerate_sequence(const TwoStateVector& tsv,
                                      std::span<const Projector> measurements) {
  for (const auto& p : measurements) {
    if (!(p.basis() == tsv.basis())) {
      throw hilbert::BasisMismatchError("measurement projector uses a different basis");
    }
  }
  std::vector<Branch> leaves;
  leaves.reserve(std::size_t{1} << measurements.size());
  std::vector<bool> path;
  walk(tsv, measurements, path, 1.0, tsv.pre(), leaves);
  return BranchDistribution(std::move(leaves));
}

double abl_found_probability(const TwoStateVector& tsv, const Projector& p) {
  const double found = std::norm(hilbert::sandwich(tsv.post(), p, tsv.pre()));
  const double missed = std::norm(hilbert::sandwich(tsv.post(), p.complement(), tsv.pre()));
  if (found + missed == 0.0) throw PostSelectionImpossible();
  return found / (found + missed);
}

Amplitude weak_value(const TwoStateVector& tsv, const Projector& p) {
  const Amplitude overlap = hilbert::inner(tsv.post(), tsv.pre());
  if (std::abs(overlap) < hilbert::kAlgebraicTolerance) throw UndefinedWeakValue();
  return hilbert::sandwich(tsv.post(), p, tsv.pre()) / overlap;
}

double meter_mean(const TwoStateVector& tsv, const Projector& p, double coupling, double width) {
  if (!(coupling > 0.0) || !(width > 0.0)) {
    throw std::invalid_argument("meter coupling and width must be positive");
  }
  const Amplitude unshifted = hilbert::sandwich(tsv.post(), p.complement(), tsv.pre());
  const Amplitude shifted = hilbert::sandwich(tsv.post(), p, tsv.pre());
  const double overlap = std::exp(-coupling * coupling / (8.0 * width * width));
  const double cross = std::real(std::conj(unshifted) * shifted);
  const double norm = std::norm(unshifted) + std::norm(shifted) + 2.0 * cross * overlap;
  if (norm <= hilbert::kAlgebraicTolerance * hilbert::kAlgebraicTolerance) {
    throw MeterPostSelectionImpossible();
  }
  return (std::norm(shifted) * coupling + cross * coupling * overlap) / norm;
}

}  // namespace threebox::twostate
