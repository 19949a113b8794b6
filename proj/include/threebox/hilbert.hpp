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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace threebox::hilbert {

using Amplitude = std::complex<double>;

inline constexpr double kAlgebraicTolerance = 1e-12;
inline constexpr double kCertaintyTolerance = 1e-9;

class NullStateError : public std::invalid_argument {
 public:
  NullStateError() : std::invalid_argument("null state: amplitudes have zero norm") {}
};

class BasisMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of unique basis labels ("A", "B", "C", "A↑", ...).
class Basis {
 public:
  Basis(std::initializer_list<std::string> labels);
  explicit Basis(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Throws BasisMismatchError for an unknown label.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Normalized ket over a labeled basis. Only make_state and collapse produce
/// these, so every instance has unit norm.
class StateVector {
 public:
  const Basis& basis() const { return basis_; }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  Amplitude amplitude(const std::string& label) const;
  std::size_t dimension() const { return amplitudes_.size(); }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  friend StateVector make_state(Basis basis, std::vector<Amplitude> amplitudes);
  StateVector(Basis basis, std::vector<Amplitude> amplitudes)
      : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {}

  Basis basis_;
  std::vector<Amplitude> amplitudes_;
};

/// Normalizes the amplitudes. Throws NullStateError on a zero vector and
/// std::invalid_argument on a length mismatch.
StateVector make_state(Basis basis, std::vector<Amplitude> amplitudes);

/// Basis ket |label⟩.
StateVector basis_state(const Basis& basis, const std::string& label);

/// Bra ⟨φ|, stored as the ket |φ⟩ it is dual to. Pairing with a ket
/// conjugates the stored amplitudes.
class CoStateVector {
 public:
  explicit CoStateVector(StateVector ket) : ket_(std::move(ket)) {}

  const Basis& basis() const { return ket_.basis(); }
  const StateVector& dual() const { return ket_; }

  friend bool operator==(const CoStateVector&, const CoStateVector&) = default;

 private:
  StateVector ket_;
};

/// ⟨φ| from the amplitudes of |φ⟩ (normalized like make_state).
CoStateVector make_costate(Basis basis, std::vector<Amplitude> amplitudes);

/// ⟨φ|ψ⟩. Throws BasisMismatchError unless both share a basis.
Amplitude inner(const CoStateVector& bra, const StateVector& ket);

/// Orthogonal projector onto the span of a subset of basis labels.
class Projector {
 public:
  Projector(Basis basis, const std::vector<std::string>& subset);

  const Basis& basis() const { return basis_; }
  bool contains(std::size_t index) const { return mask_.at(index); }
  std::vector<std::string> subset() const;
  std::size_t rank() const;

  /// 1 − P over the same basis.
  Projector complement() const;

  /// Unnormalized P|ψ⟩ amplitudes.
  std::vector<Amplitude> apply(const StateVector& state) const;

  friend bool operator==(const Projector&, const Projector&) = default;

 private:
  struct MaskTag {};
  Projector(MaskTag, Basis basis, std::vector<bool> mask)
      : basis_(std::move(basis)), mask_(std::move(mask)) {}

  Basis basis_;
  std::vector<bool> mask_;
};

/// Sum of projectors over disjoint subsets; throws std::invalid_argument on
/// overlap or mixed bases.
Projector sum(const Projector& a, const Projector& b);
bool is_identity(const Projector& p);

/// ⟨φ|P|ψ⟩.
Amplitude sandwich(const CoStateVector& bra, const Projector& p, const StateVector& ket);

struct Projection {
  double probability = 0.0;
  /// Renormalized P|ψ⟩; absent when the probability is zero.
  std::optional<StateVector> collapsed;
};

/// Born probability of the subspace and the collapsed state. A state already
/// inside the subspace is returned unchanged with probability exactly 1.
Projection project(const StateVector& state, const Projector& p);

struct Measurement {
  bool found = false;
  StateVector collapsed;
};

/// Yes/no measurement driven by a supplied variate in [0, 1):
/// found iff variate < project(state, p).probability.
Measurement measure(const StateVector& state, const Projector& p, double variate);

}  // namespace threebox::hilbert
