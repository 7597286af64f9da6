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

#include "qnd/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qnd {
namespace {

double factorial(int n) {
  double result = 1.0;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

void check_capacity(int max_photons) {
  if (max_photons < 0 || max_photons > kMaxSupportedPhotons) {
    throw std::invalid_argument("photon capacity must lie in [0, " +
                                std::to_string(kMaxSupportedPhotons) + "]");
  }
}

void enumerate_into(std::vector<int>& prefix, std::size_t modes, int remaining,
                    std::vector<OccupationVector>& out) {
  if (prefix.size() + 1 == modes) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int n = 0; n <= remaining; ++n) {
    prefix.push_back(n);
    enumerate_into(prefix, modes, remaining - n, out);
    prefix.pop_back();
  }
}

}  // namespace

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (std::any_of(counts_.begin(), counts_.end(), [](int n) { return n < 0; })) {
    throw std::invalid_argument("photon counts must be non-negative");
  }
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

int OccupationVector::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::string to_string(const OccupationVector& occupation) {
  std::ostringstream out;
  out << '|';
  for (std::size_t i = 0; i < occupation.mode_count(); ++i) {
    if (i) out << ',';
    out << occupation[i];
  }
  out << '>';
  return out.str();
}

std::vector<OccupationVector> enumerate_occupations(std::size_t modes, int photons) {
  std::vector<OccupationVector> out;
  if (modes == 0) {
    if (photons == 0) out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  enumerate_into(prefix, modes, photons, out);
  // The recursion emits 0..n in the first mode first, which is already
  // lexicographic order.
  return out;
}

// PureState

PureState::PureState(std::size_t mode_count, int max_photons)
    : mode_count_(mode_count), max_photons_(max_photons) {
  check_capacity(max_photons);
}

PureState PureState::vacuum(std::size_t mode_count, int max_photons) {
  return basis(OccupationVector(std::vector<int>(mode_count, 0)), max_photons);
}

PureState PureState::basis(const OccupationVector& occupation, int max_photons) {
  PureState state(occupation.mode_count(), max_photons);
  state.add(occupation, 1.0);
  return state;
}

PureState PureState::from_terms(std::size_t mode_count,
                                std::initializer_list<std::pair<OccupationVector, Complex>> terms,
                                int max_photons) {
  PureState state(mode_count, max_photons);
  for (const auto& [occupation, amplitude] : terms) state.add(occupation, amplitude);
  return state;
}

void PureState::add(const OccupationVector& occupation, Complex amplitude) {
  if (occupation.mode_count() != mode_count_) {
    throw std::invalid_argument("occupation " + to_string(occupation) + " does not match mode count " +
                                std::to_string(mode_count_));
  }
  if (occupation.total() > max_photons_) {
    throw CapacityError("occupation " + to_string(occupation) + " exceeds photon capacity " +
                        std::to_string(max_photons_));
  }
  terms_[occupation] += amplitude;
}

Complex PureState::amplitude(const OccupationVector& occupation) const {
  const auto it = terms_.find(occupation);
  return it == terms_.end() ? Complex{} : it->second;
}

int PureState::max_photon_number() const {
  int n = 0;
  for (const auto& [occupation, amplitude] : terms_) n = std::max(n, occupation.total());
  return n;
}

double PureState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [occupation, amplitude] : terms_) sum += std::norm(amplitude);
  return sum;
}

PureState PureState::normalized() const {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw std::domain_error("cannot normalize a zero state");
  return scaled(1.0 / norm);
}

PureState PureState::scaled(Complex factor) const {
  PureState out = *this;
  for (auto& [occupation, amplitude] : out.terms_) amplitude *= factor;
  return out;
}

PureState PureState::pruned(double threshold) const {
  PureState out(mode_count_, max_photons_);
  for (const auto& [occupation, amplitude] : terms_) {
    if (std::abs(amplitude) >= threshold) out.terms_.emplace(occupation, amplitude);
  }
  return out;
}

double max_amplitude_difference(const PureState& a, const PureState& b) {
  double worst = 0.0;
  for (const auto& [occupation, amplitude] : a.terms()) {
    worst = std::max(worst, std::abs(amplitude - b.amplitude(occupation)));
  }
  for (const auto& [occupation, amplitude] : b.terms()) {
    worst = std::max(worst, std::abs(amplitude - a.amplitude(occupation)));
  }
  return worst;
}

// Operations

PureState tensor(const PureState& a, const PureState& b) {
  const int capacity = std::max(a.max_photons(), b.max_photons());
  if (a.max_photon_number() + b.max_photon_number() > capacity) {
    throw CapacityError("tensor product can hold " +
                        std::to_string(a.max_photon_number() + b.max_photon_number()) +
                        " photons, capacity is " + std::to_string(capacity));
  }
  PureState out(a.mode_count() + b.mode_count(), capacity);
  for (const auto& [occ_a, amp_a] : a.terms()) {
    for (const auto& [occ_b, amp_b] : b.terms()) {
      std::vector<int> counts(occ_a.counts().begin(), occ_a.counts().end());
      counts.insert(counts.end(), occ_b.counts().begin(), occ_b.counts().end());
      out.add(OccupationVector(std::move(counts)), amp_a * amp_b);
    }
  }
  return out;
}

PureState apply_linear_optics(const PureState& state, const ModeTransform& u,
                              std::span<const std::size_t> targets) {
  const std::size_t arity = u.arity();
  if (targets.size() != arity) {
    throw std::invalid_argument("transform arity " + std::to_string(arity) + " does not match " +
                                std::to_string(targets.size()) + " target modes");
  }
  for (std::size_t i = 0; i < arity; ++i) {
    if (targets[i] >= state.mode_count()) {
      throw std::out_of_range("target mode " + std::to_string(targets[i]) + " out of range for " +
                              std::to_string(state.mode_count()) + " modes");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) throw std::invalid_argument("target modes must be distinct");
    }
  }

  PureState out(state.mode_count(), state.max_photons());
  using Monomial = std::vector<int>;
  for (const auto& [occupation, amplitude] : state.terms()) {
    Monomial base(occupation.counts().begin(), occupation.counts().end());
    std::vector<std::size_t> creators;  // local index per creation operator
    double input_norm = 1.0;
    for (std::size_t local = 0; local < arity; ++local) {
      const int n = occupation[targets[local]];
      input_norm *= factorial(n);
      creators.insert(creators.end(), static_cast<std::size_t>(n), local);
      base[targets[local]] = 0;
    }

    std::map<Monomial, Complex> poly{{base, 1.0}};
    for (const std::size_t local : creators) {
      std::map<Monomial, Complex> next;
      for (const auto& [monomial, coefficient] : poly) {
        for (std::size_t k = 0; k < arity; ++k) {
          const Complex weight = u(k, local);
          if (weight == Complex{}) continue;
          Monomial grown = monomial;
          ++grown[targets[k]];
          next[grown] += coefficient * weight;
        }
      }
      poly = std::move(next);
    }

    for (const auto& [monomial, coefficient] : poly) {
      double output_norm = 1.0;
      for (const std::size_t mode : targets) output_norm *= factorial(monomial[mode]);
      out.add(OccupationVector(monomial), amplitude * coefficient * std::sqrt(output_norm / input_norm));
    }
  }
  return out.pruned();
}

Projection project_pattern(const PureState& state, const PhotonPattern& pattern) {
  if (pattern.size() != state.mode_count()) {
    throw std::invalid_argument("pattern has " + std::to_string(pattern.size()) + " entries for " +
                                std::to_string(state.mode_count()) + " modes");
  }
  return project_if(state, [&](const OccupationVector& occupation) {
    for (std::size_t mode = 0; mode < pattern.size(); ++mode) {
      if (pattern[mode] && occupation[mode] != *pattern[mode]) return false;
    }
    return true;
  });
}

// QubitDensityMatrix

QubitDensityMatrix::QubitDensityMatrix(Complex hh, Complex hv, Complex vh, Complex vv)
    : entries_{{hh, hv}, {vh, vv}} {
  if (std::abs(hh.imag()) > kTolerance || std::abs(vv.imag()) > kTolerance ||
      std::abs(hv - std::conj(vh)) > kTolerance) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  const double trace = hh.real() + vv.real();
  if (std::abs(trace - 1.0) > kTolerance) {
    throw std::invalid_argument("density matrix trace " + std::to_string(trace) + " differs from 1");
  }
  const double half_gap = 0.5 * (hh.real() - vv.real());
  const double min_eigenvalue = 0.5 * trace - std::sqrt(half_gap * half_gap + std::norm(hv));
  if (min_eigenvalue < -kTolerance) {
    throw std::invalid_argument("density matrix has a negative eigenvalue");
  }
}

QubitDensityMatrix QubitDensityMatrix::pure(Complex h_amp, Complex v_amp) {
  return {h_amp * std::conj(h_amp), h_amp * std::conj(v_amp), v_amp * std::conj(h_amp),
          v_amp * std::conj(v_amp)};
}

QubitDensityMatrix reduce_to_qubit(const PureState& state, std::size_t h_mode, std::size_t v_mode) {
  if (h_mode >= state.mode_count() || v_mode >= state.mode_count() || h_mode == v_mode) {
    throw std::invalid_argument("qubit modes must be distinct and in range");
  }
  // Environment occupation -> (amplitude with photon in H, amplitude with photon in V).
  std::map<std::vector<int>, std::pair<Complex, Complex>> slices;
  for (const auto& [occupation, amplitude] : state.terms()) {
    const int nh = occupation[h_mode];
    const int nv = occupation[v_mode];
    if (nh + nv != 1) {
      throw DualRailError("basis state " + to_string(occupation) + " holds " + std::to_string(nh + nv) +
                              " photons in the qubit modes",
                          occupation);
    }
    std::vector<int> environment;
    for (std::size_t mode = 0; mode < occupation.mode_count(); ++mode) {
      if (mode != h_mode && mode != v_mode) environment.push_back(occupation[mode]);
    }
    auto& slice = slices[environment];
    (nh == 1 ? slice.first : slice.second) += amplitude;
  }

  Complex hh, hv, vv;
  for (const auto& [environment, amps] : slices) {
    hh += amps.first * std::conj(amps.first);
    hv += amps.first * std::conj(amps.second);
    vv += amps.second * std::conj(amps.second);
  }
  const double trace = hh.real() + vv.real();
  if (trace == 0.0) throw std::domain_error("cannot reduce a zero state");
  hh /= trace;
  hv /= trace;
  vv /= trace;
  return {Complex(hh.real(), 0.0), hv, std::conj(hv), Complex(vv.real(), 0.0)};
}

double purity(const QubitDensityMatrix& rho) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) sum += std::norm(rho(i, j));
  }
  return sum;
}

}  // namespace qnd
