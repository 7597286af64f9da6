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

#ifndef QND_CIRCUIT_HPP
#define QND_CIRCUIT_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qnd/fock.hpp"
#include "qnd/metrics.hpp"

namespace qnd {

/// Canonical mode layout of the measurement circuit.
namespace modes {
inline constexpr std::size_t kSignalH = 0;
inline constexpr std::size_t kSignalV = 1;
inline constexpr std::size_t kMeterH = 2;
inline constexpr std::size_t kMeterV = 3;
/// Present only when the balancing loss is enabled.
inline constexpr std::size_t kLossAncilla = 4;
}  // namespace modes

/// Dual-rail polarization qubit h|H> + v|V>.
struct PolarizationQubit {
  static constexpr double kTolerance = 1e-12;

  Complex h_amp{1.0, 0.0};
  Complex v_amp{0.0, 0.0};

  /// Throws std::invalid_argument unless |h|^2 + |v|^2 = 1 within kTolerance.
  static PolarizationQubit make(Complex h_amp, Complex v_amp);
  /// Rescales any non-zero pair to unit norm.
  static PolarizationQubit normalized(Complex h_amp, Complex v_amp);

  double population_h() const { return std::norm(h_amp); }
  double population_v() const { return std::norm(v_amp); }
};

/// sqrt(1/(1+eta)) |H> + sqrt(eta/(1+eta)) |V>: the meter state that equalizes
/// the meter components for a V signal.
PolarizationQubit prepare_meter(double eta);

/// (|H> + |V>)/sqrt(2).
PolarizationQubit equal_superposition();

/// H, V, D+, D-, R+, R- in that order.
std::vector<std::pair<std::string, PolarizationQubit>> standard_inputs();

/// Looks up one of the six standard inputs by name; nullopt if unknown.
std::optional<PolarizationQubit> standard_input(const std::string& name);

inline constexpr double kStrongEta = 1.0 / 3.0;
inline constexpr double kBalancingLossFraction = 2.0 / 3.0;
inline constexpr double kMeterHwpDegrees = 22.5;

struct CircuitConfig {
  double eta = kStrongEta;
  bool balanced_loss = false;
  double meter_hwp_angle;  // radians

  CircuitConfig();
  /// Throws std::invalid_argument if eta lies outside [0, 1].
  void validate() const;
};

enum class FailureClass { TwoInSignal, TwoInMeter, PhotonLost };

std::string to_string(FailureClass failure);

/// Classified output of one pass through the circuit.
struct RunOutcome {
  PureState success_state;  // normalized success branch; empty if success is impossible
  double success_probability = 0.0;
  std::map<FailureClass, double> failure_breakdown;

  double total_probability() const;
};

/// Raised when a quantity conditioned on success is requested for an input
/// that never succeeds.
class ZeroSuccessProbability : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two-photon input state: signal ⊗ meter, plus a vacuum ancilla when the
/// balancing loss is enabled.
PureState prepare_input(const PolarizationQubit& signal, const PolarizationQubit& meter,
                        const CircuitConfig& config);

/// Signal-meter interaction: the eta beam splitter on (s_H, m_H) and the
/// optional 2/3 loss on s_V. The meter has not been rotated yet.
PureState interact(const PolarizationQubit& signal, const PolarizationQubit& meter, const CircuitConfig& config);

/// Meter readout: HWP(meter_hwp_angle) on (m_H, m_V) followed by the detector
/// labeling, which assigns the port reached by (|H>+|V>)/sqrt(2) to outcome V.
PureState read_out_meter(const PureState& interacted, const CircuitConfig& config);

/// Full circuit, with every output pattern classified. Success is exactly one
/// photon in each of the signal and meter pairs and none in the ancilla.
RunOutcome run(const PolarizationQubit& signal, const PolarizationQubit& meter, const CircuitConfig& config);

/// Polarization analyzer placed before a PBS: an optional QWP followed by an
/// optional HWP. Outcome H is a photon in the H port of the PBS.
struct AnalyzerSetting {
  std::optional<double> qwp_angle;  // radians
  std::optional<double> hwp_angle;  // radians

  static AnalyzerSetting rectilinear() { return {}; }
  /// H outcome for (|H>+|V>)/sqrt(2).
  static AnalyzerSetting diagonal();
  /// H outcome for (|H>+i|V>)/sqrt(2), up to phase.
  static AnalyzerSetting circular();
  /// Transmits linear polarization at `angle` radians to the H port.
  static AnalyzerSetting linear_polarizer(double angle);
};

/// Success-conditioned coincidence probabilities of the signal and meter
/// detectors. Throws ZeroSuccessProbability when success is impossible.
JointDistribution joint_distribution(const PolarizationQubit& signal, const PolarizationQubit& meter,
                                     const CircuitConfig& config,
                                     const AnalyzerSetting& signal_basis = AnalyzerSetting::rectilinear(),
                                     const AnalyzerSetting& meter_basis = AnalyzerSetting::rectilinear());

/// Joint distribution of an already-computed success branch.
JointDistribution joint_distribution(const PureState& success_state, const AnalyzerSetting& signal_basis,
                                     const AnalyzerSetting& meter_basis);

/// Reduced state of the signal pair on the success branch.
QubitDensityMatrix signal_output_density_matrix(const PolarizationQubit& signal, const PolarizationQubit& meter,
                                                const CircuitConfig& config);

enum class InputDistribution {
  /// Input populations reweighted by the per-eigenstate success probability.
  SuccessConditioned,
  /// |h|^2, |v|^2 as prepared.
  Raw,
};

/// p^in for the fidelity measures. The success-conditioned reading runs the H
/// and V eigenstates through the same circuit to obtain the weights.
BinaryDistribution input_distribution(const PolarizationQubit& signal, const PolarizationQubit& meter,
                                      const CircuitConfig& config, InputDistribution mode);

/// Everything reported per signal input.
struct InputCharacterization {
  std::string name;
  double success_probability = 0.0;
  JointDistribution joint;
  BinaryDistribution p_in;
  BinaryDistribution p_m;
  BinaryDistribution p_out;
  double f_m = 0.0;
  double f_qnd = 0.0;
  double f_qsp = 0.0;
  double k = 0.0;
};

InputCharacterization characterize(const std::string& name, const PolarizationQubit& signal,
                                   const PolarizationQubit& meter, const CircuitConfig& config,
                                   InputDistribution mode = InputDistribution::SuccessConditioned);

/// Two measurements in sequence, each with a fresh meter. Probabilities are
/// conditioned on both succeeding.
struct ChainedOutcome {
  /// first index: first meter outcome, second index: second meter outcome.
  JointDistribution meters;
  /// P(second = i | first = i); nullopt when the first meter never reports i.
  std::array<std::optional<double>, 2> conditional_agreement;
  double success_probability = 0.0;

  double agreement() const { return meters.p_hh + meters.p_vv; }
};

ChainedOutcome chained_measurement(const PolarizationQubit& signal, const PolarizationQubit& meter,
                                   const CircuitConfig& config);

}  // namespace qnd

#endif  // QND_CIRCUIT_HPP
