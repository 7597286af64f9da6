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

#include "qnd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qnd {
namespace {

void check_probability(double p, double tolerance) {
  if (!(p >= -tolerance && p <= 1.0 + tolerance)) {
    throw std::invalid_argument("probability " + std::to_string(p) + " outside [0, 1]");
  }
}

void check_sum(double sum, double tolerance) {
  if (!(std::abs(sum - 1.0) <= tolerance)) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
}

void check_weight(double w) {
  if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be finite and non-negative");
}

}  // namespace

BinaryDistribution BinaryDistribution::make(double p_h, double p_v) {
  check_probability(p_h, kTolerance);
  check_probability(p_v, kTolerance);
  check_sum(p_h + p_v, kTolerance);
  return {std::clamp(p_h, 0.0, 1.0), std::clamp(p_v, 0.0, 1.0)};
}

BinaryDistribution BinaryDistribution::from_weights(double w_h, double w_v) {
  check_weight(w_h);
  check_weight(w_v);
  const double total = w_h + w_v;
  if (total == 0.0) throw std::invalid_argument("weights sum to zero");
  return {w_h / total, w_v / total};
}

JointDistribution JointDistribution::make(double p_hh, double p_hv, double p_vh, double p_vv) {
  for (const double p : {p_hh, p_hv, p_vh, p_vv}) check_probability(p, kTolerance);
  check_sum(p_hh + p_hv + p_vh + p_vv, kTolerance);
  return {std::clamp(p_hh, 0.0, 1.0), std::clamp(p_hv, 0.0, 1.0), std::clamp(p_vh, 0.0, 1.0),
          std::clamp(p_vv, 0.0, 1.0)};
}

JointDistribution JointDistribution::from_weights(double w_hh, double w_hv, double w_vh, double w_vv) {
  for (const double w : {w_hh, w_hv, w_vh, w_vv}) check_weight(w);
  const double total = w_hh + w_hv + w_vh + w_vv;
  if (total == 0.0) throw std::invalid_argument("weights sum to zero");
  return {w_hh / total, w_hv / total, w_vh / total, w_vv / total};
}

double JointDistribution::operator()(int signal, int meter) const {
  if (signal == 0) return meter == 0 ? p_hh : p_hv;
  return meter == 0 ? p_vh : p_vv;
}

BinaryDistribution JointDistribution::signal_marginal() const { return {p_hh + p_hv, p_vh + p_vv}; }

BinaryDistribution JointDistribution::meter_marginal() const { return {p_hh + p_vh, p_hv + p_vv}; }

double classical_fidelity(const BinaryDistribution& p, const BinaryDistribution& q) {
  const double overlap = std::sqrt(p.p_h * q.p_h) + std::sqrt(p.p_v * q.p_v);
  return std::min(1.0, overlap * overlap);
}

double measurement_fidelity(const BinaryDistribution& p_in, const BinaryDistribution& p_m) {
  return classical_fidelity(p_in, p_m);
}

double qnd_fidelity(const BinaryDistribution& p_in, const BinaryDistribution& p_out) {
  return classical_fidelity(p_in, p_out);
}

double qsp_fidelity(const JointDistribution& joint) { return joint.p_hh + joint.p_vv; }

double qsp_fidelity_conditional(const JointDistribution& joint) {
  const BinaryDistribution meter = joint.meter_marginal();
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    if (meter[i] > 0.0) sum += meter[i] * (joint(i, i) / meter[i]);
  }
  return sum;
}

double likelihood(const JointDistribution& joint) { return qsp_fidelity(joint); }

double knowledge(const JointDistribution& joint) {
  return joint.p_hh + joint.p_vv - joint.p_hv - joint.p_vh;
}

ComplementarityResult complementarity_check(double knowledge, double visibility) {
  const double sum = knowledge * knowledge + visibility * visibility;
  return {sum, sum <= 1.0 + kComplementarityTolerance};
}

}  // namespace qnd
