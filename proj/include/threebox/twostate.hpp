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

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "threebox/hilbert.hpp"

namespace threebox::twostate {

using hilbert::Amplitude;
using hilbert::CoStateVector;
using hilbert::Projector;
using hilbert::StateVector;

class PostSelectionImpossible : public std::domain_error {
 public:
  PostSelectionImpossible() : std::domain_error("post-selection impossible") {}
};

class UndefinedWeakValue : public std::domain_error {
 public:
  UndefinedWeakValue() : std::domain_error("undefined weak value: pre- and post-selected states are orthogonal") {}
};

class MeterPostSelectionImpossible : public std::domain_error {
 public:
  MeterPostSelectionImpossible() : std::domain_error("meter post-selection impossible") {}
};

/// Pre-selected |ψ⟩ together with post-selected ⟨φ| over one basis.
class TwoStateVector {
 public:
  /// Throws hilbert::BasisMismatchError when the bases differ.
  TwoStateVector(StateVector pre, CoStateVector post);

  const StateVector& pre() const { return pre_; }
  const CoStateVector& post() const { return post_; }
  const hilbert::Basis& basis() const { return pre_.basis(); }

 private:
  StateVector pre_;
  CoStateVector post_;
};

/// One leaf of the measurement tree.
struct Branch {
  std::vector<bool> outcomes;
  double joint = 0.0;            // product of Born weights along the path
  double post_selection = 0.0;   // |⟨φ|terminal⟩|², 0 for unreachable leaves
  std::optional<StateVector> terminal;
};

class BranchDistribution {
 public:
  explicit BranchDistribution(std::vector<Branch> branches);

  std::span<const Branch> branches() const { return branches_; }
  double total_joint() const;
  double p_post() const { return p_post_; }

  /// P(outcomes | post-selection). Throws PostSelectionImpossible when
  /// p_post is zero, std::invalid_argument for an unknown sequence.
  double conditional(const std::vector<bool>& outcomes) const;

 private:
  std::vector<Branch> branches_;
  double p_post_ = 0.0;
};

/// Walks the full binary tree of yes/no measurements between pre- and
/// post-selection. The leaves are ordered lexicographically with `true`
/// (found) before `false`.
BranchDistribution enumerate_sequence(const TwoStateVector& tsv,
                                      std::span<const Projector> measurements);

/// Closed-form P(found | post) = |⟨φ|P|ψ⟩|² / (|⟨φ|P|ψ⟩|² + |⟨φ|(1−P)|ψ⟩|²).
double abl_found_probability(const TwoStateVector& tsv, const Projector& p);

/// ⟨φ|P|ψ⟩ / ⟨φ|ψ⟩.
Amplitude weak_value(const TwoStateVector& tsv, const Projector& p);

/// Mean pointer position of a Gaussian meter (position spread `width`) that
/// is shifted by `coupling` on the range of P, after post-selection.
double meter_mean(const TwoStateVector& tsv, const Projector& p, double coupling, double width);

}  // namespace threebox::twostate
