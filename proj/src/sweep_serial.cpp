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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qnd/optics.hpp"
#include "qnd/sweep.hpp"
#include "sweep_detail.hpp"

namespace qnd {

PolarizationQubit weak_meter(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  return {alpha, std::sqrt(std::max(0.0, 1.0 - alpha * alpha))};
}

double strong_alpha() { return std::sqrt(3.0) / 2.0; }

std::vector<double> alpha_grid(double from, double to, int steps) {
  if (steps < 2) throw std::invalid_argument("a sweep needs at least 2 steps");
  std::vector<double> alphas(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    alphas[static_cast<std::size_t>(i)] = from + (to - from) * i / (steps - 1);
  }
  alphas.back() = to;
  return alphas;
}

double visibility_from_coherence(const QubitDensityMatrix& rho) { return 2.0 * std::abs(rho.coherence()); }

double fringe_visibility(const PolarizationQubit& signal, const PolarizationQubit& meter,
                         const CircuitConfig& config, double step_degrees) {
  if (!(step_degrees > 0.0)) throw std::invalid_argument("fringe step must be positive");
  const RunOutcome outcome = run(signal, meter, config);
  double lo = 1.0;
  double hi = 0.0;
  for (double angle = 0.0; angle < 180.0; angle += step_degrees) {
    const auto polarizer = AnalyzerSetting::linear_polarizer(degrees_to_radians(angle));
    const double p_h =
        joint_distribution(outcome.success_state, polarizer, AnalyzerSetting::rectilinear()).signal_marginal().p_h;
    lo = std::min(lo, p_h);
    hi = std::max(hi, p_h);
  }
  return (hi - lo) / (hi + lo);
}

SweepPoint sweep_point(const PolarizationQubit& signal, double alpha, const CircuitConfig& config) {
  const RunOutcome outcome = run(signal, weak_meter(alpha), config);
  if (outcome.success_state.empty()) throw ZeroSuccessProbability("sweep point never succeeds");
  const JointDistribution joint =
      joint_distribution(outcome.success_state, AnalyzerSetting::rectilinear(), AnalyzerSetting::rectilinear());
  const QubitDensityMatrix rho = reduce_to_qubit(outcome.success_state, modes::kSignalH, modes::kSignalV);
  return {alpha, knowledge(joint), visibility_from_coherence(rho), purity(rho), outcome.success_probability};
}

namespace detail {

void check_sweep(std::span<const double> alphas, const CircuitConfig& config) {
  if (!config.balanced_loss) {
    throw std::invalid_argument("the weak sweep requires the 2/3 balancing loss on s_V");
  }
  config.validate();
  for (const double alpha : alphas) weak_meter(alpha);
}

}  // namespace detail

std::vector<SweepPoint> weak_sweep_serial(const PolarizationQubit& signal, std::span<const double> alphas,
                                          const CircuitConfig& config) {
  detail::check_sweep(alphas, config);
  std::vector<SweepPoint> points;
  points.reserve(alphas.size());
  for (const double alpha : alphas) points.push_back(sweep_point(signal, alpha, config));
  return points;
}

}  // namespace qnd
