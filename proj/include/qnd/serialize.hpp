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

#ifndef QND_SERIALIZE_HPP
#define QND_SERIALIZE_HPP

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "qnd/circuit.hpp"
#include "qnd/sweep.hpp"

namespace qnd {

inline constexpr int kFileDigits = 12;
inline constexpr int kTerminalDigits = 4;

/// printf-style %.{digits}g.
std::string format_significant(double value, int digits);

/// `value` rounded to `digits` significant digits.
double round_significant(double value, int digits = kFileDigits);

/// {"modes": M, "terms": [{"occ": [...], "re": x, "im": y}, ...]}, terms in
/// occupation order.
nlohmann::json to_json(const PureState& state);

/// Throws std::invalid_argument on malformed documents.
PureState pure_state_from_json(const nlohmann::json& document, int max_photons = kDefaultMaxPhotons);

/// {"rho": [[{"re", "im"}, {"re", "im"}], [...]], "purity": p}, row-major.
nlohmann::json to_json(const QubitDensityMatrix& rho);

nlohmann::json to_json(const BinaryDistribution& p);
nlohmann::json to_json(const JointDistribution& joint);

/// Metrics block {input, p_in, p_m, p_out, F_M, F_QND, F_QSP, K}.
nlohmann::json to_json(const InputCharacterization& c);

nlohmann::json to_json(const RunOutcome& outcome);

inline constexpr const char* kSweepCsvHeader = "alpha,K,V,K2plusV2,purity,p_success";

/// Header plus one row per point, LF line endings.
void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points);

}  // namespace qnd

#endif  // QND_SERIALIZE_HPP
