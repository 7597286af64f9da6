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

#ifndef QND_METRICS_HPP
#define QND_METRICS_HPP

namespace qnd {

/// Probability distribution over the two polarization outcomes {H, V}.
struct BinaryDistribution {
  static constexpr double kTolerance = 1e-12;

  double p_h = 1.0;
  double p_v = 0.0;

  /// Throws std::invalid_argument on negative entries or a sum away from 1.
  static BinaryDistribution make(double p_h, double p_v);
  /// Rescales non-negative weights to unit sum.
  static BinaryDistribution from_weights(double w_h, double w_v);

  double operator[](int outcome) const { return outcome == 0 ? p_h : p_v; }
};

/// Coincidence probabilities P_sm; the first index is the signal outcome,
/// the second the meter outcome.
struct JointDistribution {
  static constexpr double kTolerance = 1e-12;

  double p_hh = 0.0;
  double p_hv = 0.0;
  double p_vh = 0.0;
  double p_vv = 0.0;

  static JointDistribution make(double p_hh, double p_hv, double p_vh, double p_vv);
  static JointDistribution from_weights(double w_hh, double w_hv, double w_vh, double w_vv);

  double operator()(int signal, int meter) const;

  BinaryDistribution signal_marginal() const;
  BinaryDistribution meter_marginal() const;
};

/// F(p, q) = (sum_i sqrt(p_i q_i))^2.
double classical_fidelity(const BinaryDistribution& p, const BinaryDistribution& q);

/// F_M = F(p_in, p_m).
double measurement_fidelity(const BinaryDistribution& p_in, const BinaryDistribution& p_m);

/// F_QND = F(p_in, p_out).
double qnd_fidelity(const BinaryDistribution& p_in, const BinaryDistribution& p_out);

/// F_QSP = P_HH + P_VV.
double qsp_fidelity(const JointDistribution& joint);

/// F_QSP in its general form sum_i p_i^m * P(signal = i | meter = i).
/// Outcomes the meter never reports contribute nothing.
double qsp_fidelity_conditional(const JointDistribution& joint);

/// Likelihood L, identical to F_QSP for a qubit.
double likelihood(const JointDistribution& joint);

/// K = P_HH + P_VV - P_HV - P_VH.
double knowledge(const JointDistribution& joint);

struct ComplementarityResult {
  double sum;  // K^2 + V^2
  bool satisfied;
};

inline constexpr double kComplementarityTolerance = 1e-9;

ComplementarityResult complementarity_check(double knowledge, double visibility);

}  // namespace qnd

#endif  // QND_METRICS_HPP
