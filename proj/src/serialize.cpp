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

#include "qnd/serialize.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qnd {

std::string format_significant(double value, int digits) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

double round_significant(double value, int digits) { return std::stod(format_significant(value, digits)); }

nlohmann::json to_json(const PureState& state) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [occupation, amplitude] : state.terms()) {
    terms.push_back({{"occ", std::vector<int>(occupation.counts().begin(), occupation.counts().end())},
                     {"re", round_significant(amplitude.real())},
                     {"im", round_significant(amplitude.imag())}});
  }
  return {{"modes", state.mode_count()}, {"terms", std::move(terms)}};
}

PureState pure_state_from_json(const nlohmann::json& document, int max_photons) {
  try {
    PureState state(document.at("modes").get<std::size_t>(), max_photons);
    for (const auto& term : document.at("terms")) {
      state.add(OccupationVector(term.at("occ").get<std::vector<int>>()),
                Complex(term.at("re").get<double>(), term.at("im").get<double>()));
    }
    return state;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed state document: ") + e.what());
  }
}

nlohmann::json to_json(const QubitDensityMatrix& rho) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < 2; ++j) {
      row.push_back({{"re", round_significant(rho(i, j).real())}, {"im", round_significant(rho(i, j).imag())}});
    }
    rows.push_back(std::move(row));
  }
  return {{"rho", std::move(rows)}, {"purity", round_significant(purity(rho))}};
}

nlohmann::json to_json(const BinaryDistribution& p) {
  return {{"H", round_significant(p.p_h)}, {"V", round_significant(p.p_v)}};
}

nlohmann::json to_json(const JointDistribution& joint) {
  return {{"P_HH", round_significant(joint.p_hh)},
          {"P_HV", round_significant(joint.p_hv)},
          {"P_VH", round_significant(joint.p_vh)},
          {"P_VV", round_significant(joint.p_vv)}};
}

nlohmann::json to_json(const InputCharacterization& c) {
  return {{"input", c.name},
          {"p_in", to_json(c.p_in)},
          {"p_m", to_json(c.p_m)},
          {"p_out", to_json(c.p_out)},
          {"F_M", round_significant(c.f_m)},
          {"F_QND", round_significant(c.f_qnd)},
          {"F_QSP", round_significant(c.f_qsp)},
          {"K", round_significant(c.k)}};
}

nlohmann::json to_json(const RunOutcome& outcome) {
  nlohmann::json failures = nlohmann::json::object();
  for (const auto& [failure, p] : outcome.failure_breakdown) failures[to_string(failure)] = round_significant(p);
  return {{"success_probability", round_significant(outcome.success_probability)},
          {"failure_breakdown", std::move(failures)},
          {"success_state", to_json(outcome.success_state)}};
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points) {
  out << kSweepCsvHeader << '\n';
  for (const SweepPoint& p : points) {
    out << format_significant(p.alpha, kFileDigits) << ',' << format_significant(p.knowledge, kFileDigits) << ','
        << format_significant(p.visibility, kFileDigits) << ',' << format_significant(p.k2_plus_v2(), kFileDigits)
        << ',' << format_significant(p.purity, kFileDigits) << ','
        << format_significant(p.success_probability, kFileDigits) << '\n';
  }
}

}  // namespace qnd
