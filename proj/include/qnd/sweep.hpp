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

#ifndef QND_SWEEP_HPP
#define QND_SWEEP_HPP

#include <span>
#include <vector>

#include "qnd/circuit.hpp"

namespace qnd {

/// One meter setting of the weak-measurement sweep.
struct SweepPoint {
  double alpha = 0.0;
  double knowledge = 0.0;
  double visibility = 0.0;
  double purity = 0.0;
  double success_probability = 0.0;

  double k2_plus_v2() const { return knowledge * knowledge + visibility * visibility; }
  bool operator==(const SweepPoint&) const = default;
};

/// Meter alpha|H> + sqrt(1 - alpha^2)|V>, alpha in [0, 1].
PolarizationQubit weak_meter(double alpha);

/// The strong end of the sweep, where the meter equals |D'>.
double strong_alpha();

/// `steps` evenly spaced values from `from` to `to`, both ends included.
std::vector<double> alpha_grid(double from, double to, int steps);

/// V = 2|rho_HV| of the success-conditioned signal output.
double visibility_from_coherence(const QubitDensityMatrix& rho);

/// Fringe visibility (max - min)/(max + min) of P(signal = H) as a linear
/// polarizer in front of the signal detector turns through [0, 180) degrees.
double fringe_visibility(const PolarizationQubit& signal, const PolarizationQubit& meter,
                         const CircuitConfig& config, double step_degrees = 1.0);

/// Evaluates a single sweep point.
SweepPoint sweep_point(const PolarizationQubit& signal, double alpha, const CircuitConfig& config);

/// Serial reference sweep. Throws std::invalid_argument unless the balancing
/// loss is enabled and every alpha lies in [0, 1].
std::vector<SweepPoint> weak_sweep_serial(const PolarizationQubit& signal, std::span<const double> alphas,
                                          const CircuitConfig& config);

/// OpenMP sweep with the same contract; results are ordered as `alphas` and
/// bitwise identical to the serial sweep. `threads` <= 0 uses
/// sweep_thread_count().
std::vector<SweepPoint> weak_sweep(const PolarizationQubit& signal, std::span<const double> alphas,
                                   const CircuitConfig& config, int threads = 0);

/// QND_THREADS when set to a positive integer, capped by the OpenMP maximum;
/// otherwise the OpenMP maximum.
int sweep_thread_count();

}  // namespace qnd

#endif  // QND_SWEEP_HPP
