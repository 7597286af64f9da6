// Copyright 2026 The qnd-sim Authors
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

#ifndef QND_FOCK_HPP
#define QND_FOCK_HPP

#include <compare>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qnd/mode_transform.hpp"

namespace qnd {

inline constexpr int kDefaultMaxPhotons = 2;
inline constexpr int kMaxSupportedPhotons = 4;

/// Amplitudes below this magnitude are dropped after every optical element.
inline constexpr double kPruneThreshold = 1e-14;

/// Photon counts per optical mode. Ordered lexicographically.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);
  OccupationVector(std::initializer_list<int> counts);

  std::size_t mode_count() const { return counts_.size(); }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  std::span<const int> counts() const { return counts_; }
  int total() const;

  auto operator<=>(const OccupationVector&) const = default;
  bool operator==(const OccupationVector&) const = default;

 private:
  std::vector<int> counts_;
};

/// "|1,0,1,0>"
std::string to_string(const OccupationVector& occupation);

/// Every occupation of `modes` modes holding exactly `photons` photons, in
/// lexicographic order.
std::vector<OccupationVector> enumerate_occupations(std::size_t modes, int photons);

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by reduce_to_qubit when a surviving basis state does not hold
/// exactly one photon in the (H, V) pair.
class DualRailError : public std::runtime_error {
 public:
  DualRailError(const std::string& what, OccupationVector offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}
  const OccupationVector& offending() const { return offending_; }

 private:
  OccupationVector offending_;
};

/// Sparse state vector over a fixed number of modes holding at most
/// `max_photons` photons in total.
class PureState {
 public:
  using Terms = std::map<OccupationVector, Complex>;

  explicit PureState(std::size_t mode_count, int max_photons = kDefaultMaxPhotons);

  static PureState vacuum(std::size_t mode_count, int max_photons = kDefaultMaxPhotons);
  static PureState basis(const OccupationVector& occupation, int max_photons = kDefaultMaxPhotons);
  static PureState from_terms(std::size_t mode_count,
                              std::initializer_list<std::pair<OccupationVector, Complex>> terms,
                              int max_photons = kDefaultMaxPhotons);

  /// Adds `amplitude` to the coefficient of `occupation`.
  void add(const OccupationVector& occupation, Complex amplitude);

  Complex amplitude(const OccupationVector& occupation) const;
  const Terms& terms() const { return terms_; }
  std::size_t mode_count() const { return mode_count_; }
  int max_photons() const { return max_photons_; }
  bool empty() const { return terms_.empty(); }

  /// Largest photon number carried by any term.
  int max_photon_number() const;
  double norm_squared() const;

  PureState normalized() const;
  PureState scaled(Complex factor) const;
  PureState pruned(double threshold = kPruneThreshold) const;

 private:
  std::size_t mode_count_;
  int max_photons_;
  Terms terms_;
};

/// Amplitude-wise distance max |a_i - b_i| over the union of supports.
double max_amplitude_difference(const PureState& a, const PureState& b);

/// Modes of `b` are appended after those of `a`. The result keeps the larger
/// of the two capacities; throws CapacityError if the combined photon number
/// can exceed it.
PureState tensor(const PureState& a, const PureState& b);

/// Substitutes a†_j -> sum_k u(k, j) a†_{targets[k]} for every creation
/// operator on the target modes and re-expands in the occupation basis.
PureState apply_linear_optics(const PureState& state, const ModeTransform& u,
                              std::span<const std::size_t> targets);

inline PureState apply_linear_optics(const PureState& state, const ModeTransform& u,
                                     std::initializer_list<std::size_t> targets) {
  return apply_linear_optics(state, u, std::span<const std::size_t>(targets.begin(), targets.size()));
}

/// Per-mode constraint: an exact photon count, or nullopt for "any".
using PhotonPattern = std::vector<std::optional<int>>;

struct Projection {
  PureState branch;    // renormalized; empty when impossible
  double probability;  // squared norm of the kept component

  bool impossible() const { return branch.empty(); }
};

Projection project_pattern(const PureState& state, const PhotonPattern& pattern);

template <typename Predicate>
Projection project_if(const PureState& state, Predicate keep) {
  PureState kept(state.mode_count(), state.max_photons());
  for (const auto& [occupation, amplitude] : state.terms()) {
    if (keep(occupation)) kept.add(occupation, amplitude);
  }
  const double probability = kept.norm_squared();
  if (kept.empty()) return {std::move(kept), 0.0};
  return {kept.normalized(), probability};
}

/// 2x2 density matrix in the (H, V) basis.
class QubitDensityMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws std::invalid_argument if the matrix is not Hermitian, unit-trace
  /// and positive semidefinite within kTolerance.
  QubitDensityMatrix(Complex hh, Complex hv, Complex vh, Complex vv);

  static QubitDensityMatrix pure(Complex h_amp, Complex v_amp);

  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  Complex coherence() const { return entries_[0][1]; }

 private:
  Complex entries_[2][2];
};

/// Partial trace onto the dual-rail qubit (h_mode, v_mode). The input need not
/// be normalized; the result always has unit trace.
QubitDensityMatrix reduce_to_qubit(const PureState& state, std::size_t h_mode, std::size_t v_mode);

/// Tr[rho^2].
double purity(const QubitDensityMatrix& rho);

}  // namespace qnd

#endif  // QND_FOCK_HPP
