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

#include "qnd/circuit.hpp"

#include <cmath>
#include <numbers>

#include "qnd/optics.hpp"

namespace qnd {
namespace {

using namespace modes;

PureState qubit_state(const PolarizationQubit& qubit) {
  return PureState::from_terms(2, {{{1, 0}, qubit.h_amp}, {{0, 1}, qubit.v_amp}});
}

int photons_in(const OccupationVector& occupation, std::size_t first, std::size_t second) {
  return occupation[first] + occupation[second];
}

bool has_ancilla(const PureState& state) { return state.mode_count() > kLossAncilla; }

PureState apply_analyzer(const PureState& state, const AnalyzerSetting& setting, std::size_t h_mode,
                         std::size_t v_mode) {
  PureState out = state;
  if (setting.qwp_angle) out = apply_linear_optics(out, quarter_wave_plate(*setting.qwp_angle), {h_mode, v_mode});
  if (setting.hwp_angle) out = apply_linear_optics(out, half_wave_plate(*setting.hwp_angle), {h_mode, v_mode});
  return out;
}

}  // namespace

// PolarizationQubit

PolarizationQubit PolarizationQubit::make(Complex h_amp, Complex v_amp) {
  const double norm = std::norm(h_amp) + std::norm(v_amp);
  if (!(std::abs(norm - 1.0) <= kTolerance)) {
    throw std::invalid_argument("polarization qubit has squared norm " + std::to_string(norm));
  }
  return {h_amp, v_amp};
}

PolarizationQubit PolarizationQubit::normalized(Complex h_amp, Complex v_amp) {
  const double norm = std::sqrt(std::norm(h_amp) + std::norm(v_amp));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("cannot normalize a zero qubit");
  return {h_amp / norm, v_amp / norm};
}

PolarizationQubit prepare_meter(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in [0, 1]");
  return {std::sqrt(1.0 / (1.0 + eta)), std::sqrt(eta / (1.0 + eta))};
}

PolarizationQubit equal_superposition() { return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0}; }

std::vector<std::pair<std::string, PolarizationQubit>> standard_inputs() {
  const double h = std::sqrt(3.0) / 2.0;
  const Complex i(0.0, 1.0);
  return {
      {"H", {1.0, 0.0}},    {"V", {0.0, 1.0}},    {"D+", {h, 0.5}},
      {"D-", {-h, 0.5}},    {"R+", {i * h, 0.5}}, {"R-", {-i * h, 0.5}},
  };
}

std::optional<PolarizationQubit> standard_input(const std::string& name) {
  for (const auto& [label, qubit] : standard_inputs()) {
    if (label == name) return qubit;
  }
  return std::nullopt;
}

// CircuitConfig

CircuitConfig::CircuitConfig() : meter_hwp_angle(degrees_to_radians(kMeterHwpDegrees)) {}

void CircuitConfig::validate() const {
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in [0, 1]");
  if (!std::isfinite(meter_hwp_angle)) throw std::invalid_argument("meter HWP angle must be finite");
}

std::string to_string(FailureClass failure) {
  switch (failure) {
    case FailureClass::TwoInSignal:
      return "two-in-signal";
    case FailureClass::TwoInMeter:
      return "two-in-meter";
    case FailureClass::PhotonLost:
      return "photon-lost";
  }
  return "unknown";
}

double RunOutcome::total_probability() const {
  double sum = success_probability;
  for (const auto& [failure, p] : failure_breakdown) sum += p;
  return sum;
}

// Circuit stages

PureState prepare_input(const PolarizationQubit& signal, const PolarizationQubit& meter,
                        const CircuitConfig& config) {
  PureState state = tensor(qubit_state(signal), qubit_state(meter));
  if (config.balanced_loss) state = tensor(state, PureState::vacuum(1));
  return state;
}

PureState interact(const PolarizationQubit& signal, const PolarizationQubit& meter, const CircuitConfig& config) {
  config.validate();
  PureState state = prepare_input(signal, meter, config);
  state = apply_linear_optics(state, beam_splitter(config.eta), {kSignalH, kMeterH});
  if (config.balanced_loss) {
    state = apply_linear_optics(state, loss_channel(kBalancingLossFraction), {kSignalV, kLossAncilla});
  }
  return state;
}

PureState read_out_meter(const PureState& interacted, const CircuitConfig& config) {
  PureState state = apply_linear_optics(interacted, half_wave_plate(config.meter_hwp_angle), {kMeterH, kMeterV});
  return apply_linear_optics(state, mode_swap(), {kMeterH, kMeterV});
}

RunOutcome run(const PolarizationQubit& signal, const PolarizationQubit& meter, const CircuitConfig& config) {
  const PureState output = read_out_meter(interact(signal, meter, config), config);
  const bool ancilla = has_ancilla(output);

  RunOutcome outcome{PureState(output.mode_count()), 0.0, {}};
  outcome.failure_breakdown = {
      {FailureClass::TwoInSignal, 0.0}, {FailureClass::TwoInMeter, 0.0}, {FailureClass::PhotonLost, 0.0}};

  PureState success(output.mode_count());
  for (const auto& [occupation, amplitude] : output.terms()) {
    const double p = std::norm(amplitude);
    if (ancilla && occupation[kLossAncilla] > 0) {
      outcome.failure_breakdown[FailureClass::PhotonLost] += p;
    } else if (photons_in(occupation, kSignalH, kSignalV) == 2) {
      outcome.failure_breakdown[FailureClass::TwoInSignal] += p;
    } else if (photons_in(occupation, kMeterH, kMeterV) == 2) {
      outcome.failure_breakdown[FailureClass::TwoInMeter] += p;
    } else {
      success.add(occupation, amplitude);
    }
  }
  outcome.success_probability = success.norm_squared();
  if (!success.empty()) outcome.success_state = success.normalized();
  return outcome;
}

// Analysis

AnalyzerSetting AnalyzerSetting::diagonal() { return {std::nullopt, degrees_to_radians(22.5)}; }

AnalyzerSetting AnalyzerSetting::circular() { return {degrees_to_radians(45.0), std::nullopt}; }

AnalyzerSetting AnalyzerSetting::linear_polarizer(double angle) { return {std::nullopt, angle / 2.0}; }

JointDistribution joint_distribution(const PureState& success_state, const AnalyzerSetting& signal_basis,
                                     const AnalyzerSetting& meter_basis) {
  if (success_state.empty()) throw ZeroSuccessProbability("the circuit never succeeds for this input");
  PureState state = apply_analyzer(success_state, signal_basis, kSignalH, kSignalV);
  state = apply_analyzer(state, meter_basis, kMeterH, kMeterV);

  double weights[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  for (const auto& [occupation, amplitude] : state.terms()) {
    const int signal = occupation[kSignalH] == 1 ? 0 : 1;
    const int meter = occupation[kMeterH] == 1 ? 0 : 1;
    weights[signal][meter] += std::norm(amplitude);
  }
  return JointDistribution::from_weights(weights[0][0], weights[0][1], weights[1][0], weights[1][1]);
}

JointDistribution joint_distribution(const PolarizationQubit& signal, const PolarizationQubit& meter,
                                     const CircuitConfig& config, const AnalyzerSetting& signal_basis,
                                     const AnalyzerSetting& meter_basis) {
  return joint_distribution(run(signal, meter, config).success_state, signal_basis, meter_basis);
}

QubitDensityMatrix signal_output_density_matrix(const PolarizationQubit& signal, const PolarizationQubit& meter,
                                                const CircuitConfig& config) {
  const RunOutcome outcome = run(signal, meter, config);
  if (outcome.success_state.empty()) throw ZeroSuccessProbability("the circuit never succeeds for this input");
  return reduce_to_qubit(outcome.success_state, kSignalH, kSignalV);
}

BinaryDistribution input_distribution(const PolarizationQubit& signal, const PolarizationQubit& meter,
                                      const CircuitConfig& config, InputDistribution mode) {
  if (mode == InputDistribution::Raw) return BinaryDistribution::from_weights(signal.population_h(), signal.population_v());
  const double success_h = run({1.0, 0.0}, meter, config).success_probability;
  const double success_v = run({0.0, 1.0}, meter, config).success_probability;
  return BinaryDistribution::from_weights(signal.population_h() * success_h, signal.population_v() * success_v);
}

InputCharacterization characterize(const std::string& name, const PolarizationQubit& signal,
                                   const PolarizationQubit& meter, const CircuitConfig& config,
                                   InputDistribution mode) {
  const RunOutcome outcome = run(signal, meter, config);
  InputCharacterization c;
  c.name = name;
  c.success_probability = outcome.success_probability;
  c.joint = joint_distribution(outcome.success_state, AnalyzerSetting::rectilinear(), AnalyzerSetting::rectilinear());
  c.p_in = input_distribution(signal, meter, config, mode);
  c.p_m = c.joint.meter_marginal();
  c.p_out = c.joint.signal_marginal();
  c.f_m = measurement_fidelity(c.p_in, c.p_m);
  c.f_qnd = qnd_fidelity(c.p_in, c.p_out);
  c.f_qsp = qsp_fidelity(c.joint);
  c.k = knowledge(c.joint);
  return c;
}

ChainedOutcome chained_measurement(const PolarizationQubit& signal, const PolarizationQubit& meter,
                                   const CircuitConfig& config) {
  const RunOutcome first = run(signal, meter, config);
  if (first.success_state.empty()) throw ZeroSuccessProbability("the first measurement never succeeds");

  double weights[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
  double total = 0.0;
  ChainedOutcome chained;
  for (int first_outcome = 0; first_outcome < 2; ++first_outcome) {
    const std::size_t meter_mode = first_outcome == 0 ? kMeterH : kMeterV;
    PhotonPattern pattern(first.success_state.mode_count(), std::nullopt);
    pattern[meter_mode] = 1;
    const Projection collapsed = project_pattern(first.success_state, pattern);
    if (collapsed.impossible()) continue;

    // With the meter photon fixed the signal is left in a pure state.
    std::vector<int> in_h(collapsed.branch.mode_count(), 0);
    in_h[meter_mode] = 1;
    std::vector<int> in_v = in_h;
    in_h[kSignalH] = 1;
    in_v[kSignalV] = 1;
    const PolarizationQubit conditioned = PolarizationQubit::normalized(
        collapsed.branch.amplitude(OccupationVector(in_h)), collapsed.branch.amplitude(OccupationVector(in_v)));

    const RunOutcome second = run(conditioned, meter, config);
    if (second.success_state.empty()) continue;
    const BinaryDistribution second_meter =
        joint_distribution(second.success_state, AnalyzerSetting::rectilinear(), AnalyzerSetting::rectilinear())
            .meter_marginal();

    const double weight = collapsed.probability * second.success_probability;
    total += weight;
    weights[first_outcome][0] = weight * second_meter.p_h;
    weights[first_outcome][1] = weight * second_meter.p_v;
    chained.conditional_agreement[static_cast<std::size_t>(first_outcome)] = second_meter[first_outcome];
  }
  if (total == 0.0) throw ZeroSuccessProbability("the second measurement never succeeds");
  chained.meters = JointDistribution::from_weights(weights[0][0], weights[0][1], weights[1][0], weights[1][1]);
  chained.success_probability = first.success_probability * total;
  return chained;
}

}  // namespace qnd
