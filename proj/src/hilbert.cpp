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

#include "threebox/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace threebox::hilbert {

namespace {

void require_same_basis(const Basis& a, const Basis& b, const char* what) {
  if (!(a == b)) throw BasisMismatchError(std::string("basis mismatch in ") + what);
}

}  // namespace

Basis::Basis(std::initializer_list<std::string> labels)
    : Basis(std::vector<std::string>(labels)) {}

Basis::Basis(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("basis must not be empty");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate basis label '" + l + "'");
  }
}

std::size_t Basis::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw BasisMismatchError("label '" + label + "' is not in the basis");
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Basis::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

Amplitude StateVector::amplitude(const std::string& label) const {
  return amplitudes_[basis_.index_of(label)];
}

StateVector make_state(Basis basis, std::vector<Amplitude> amplitudes) {
  if (amplitudes.size() != basis.size()) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes.size()) +
                                " does not match basis size " + std::to_string(basis.size()));
  }
  double norm_sq = 0.0;
  for (const auto& a : amplitudes) norm_sq += std::norm(a);
  if (norm_sq == 0.0 || !std::isfinite(norm_sq)) throw NullStateError();
  if (norm_sq != 1.0) {
    const double norm = std::sqrt(norm_sq);
    for (auto& a : amplitudes) a /= norm;
  }
  return StateVector(std::move(basis), std::move(amplitudes));
}

StateVector basis_state(const Basis& basis, const std::string& label) {
  std::vector<Amplitude> amps(basis.size());
  amps[basis.index_of(label)] = 1.0;
  return make_state(basis, std::move(amps));
}

CoStateVector make_costate(Basis basis, std::vector<Amplitude> amplitudes) {
  return CoStateVector(make_state(std::move(basis), std::move(amplitudes)));
}

Amplitude inner(const CoStateVector& bra, const StateVector& ket) {
  require_same_basis(bra.basis(), ket.basis(), "inner");
  const auto phi = bra.dual().amplitudes();
  const auto psi = ket.amplitudes();
  Amplitude acc{};
  for (std::size_t i = 0; i < psi.size(); ++i) acc += std::conj(phi[i]) * psi[i];
  return acc;
}

Projector::Projector(Basis basis, const std::vector<std::string>& subset)
    : basis_(std::move(basis)), mask_(basis_.size(), false) {
  for (const auto& label : subset) mask_[basis_.index_of(label)] = true;
}

std::vector<std::string> Projector::subset() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i]) out.push_back(basis_.label(i));
  }
  return out;
}

std::size_t Projector::rank() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

Projector Projector::complement() const {
  std::vector<bool> flipped(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i) flipped[i] = !mask_[i];
  return Projector(MaskTag{}, basis_, std::move(flipped));
}

std::vector<Amplitude> Projector::apply(const StateVector& state) const {
  require_same_basis(basis_, state.basis(), "projector application");
  std::vector<Amplitude> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!mask_[i]) out[i] = 0.0;
  }
  return out;
}

Projector sum(const Projector& a, const Projector& b) {
  require_same_basis(a.basis(), b.basis(), "projector sum");
  auto labels = a.subset();
  for (const auto& l : b.subset()) {
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) {
      throw std::invalid_argument("projector sum over overlapping subsets");
    }
    labels.push_back(l);
  }
  return Projector(a.basis(), labels);
}

bool is_identity(const Projector& p) { return p.rank() == p.basis().size(); }

Amplitude sandwich(const CoStateVector& bra, const Projector& p, const StateVector& ket) {
  require_same_basis(bra.basis(), p.basis(), "sandwich");
  require_same_basis(p.basis(), ket.basis(), "sandwich");
  const auto phi = bra.dual().amplitudes();
  const auto psi = ket.amplitudes();
  Amplitude acc{};
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (p.contains(i)) acc += std::conj(phi[i]) * psi[i];
  }
  return acc;
}

Projection project(const StateVector& state, const Projector& p) {
  require_same_basis(state.basis(), p.basis(), "project");
  const auto amps = state.amplitudes();
  bool any_inside = false;
  bool any_outside = false;
  double inside = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (amps[i] == Amplitude{}) continue;
    if (p.contains(i)) {
      any_inside = true;
      inside += std::norm(amps[i]);
    } else {
      any_outside = true;
    }
  }
  if (!any_inside) return {0.0, std::nullopt};
  if (!any_outside) return {1.0, state};
  return {std::min(inside, 1.0), make_state(state.basis(), p.apply(state))};
}

Measurement measure(const StateVector& state, const Projector& p, double variate) {
  if (!(variate >= 0.0 && variate < 1.0)) {
    throw std::invalid_argument("measurement variate must lie in [0, 1)");
  }
  auto hit = project(state, p);
  if (variate < hit.probability) return {true, std::move(*hit.collapsed)};
  auto miss = project(state, p.complement());
  // variate >= probability < 1 guarantees a non-empty complement branch, up
  // to rounding; fall back to the found branch if rounding left it empty.
  if (!miss.collapsed) return {true, std::move(*hit.collapsed)};
  return {false, std::move(*miss.collapsed)};
}

}  // namespace threebox::hilbert
