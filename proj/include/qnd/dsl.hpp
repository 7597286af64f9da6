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

#ifndef QND_DSL_HPP
#define QND_DSL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qnd/circuit.hpp"

// Line-oriented experiment description (`.qnd` files):
//
//   plan   := stmt+
//   stmt   := "signal" (NAME | "state(" num "," num ")")
//           | "meter" ("dprime" | "d(" num ")" | "state(" num "," num ")")
//           | "eta" num
//           | "balanced_loss" ("on" | "off")
//           | "sweep" "alpha" num ".." num "steps" int
//           | "table" | "densmat" | "run"
//           | "output" ("csv" | "json") path
//   NAME   := H | V | D+ | D- | R+ | R-
//
// "#" starts a comment. Numbers are exact rationals written as decimals or
// fractions such as 1/3. LF and CRLF line endings are accepted.

namespace qnd::dsl {

/// Exact rational, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  /// Throws std::invalid_argument if `den` is zero.
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Canonical spelling: an integer, a terminating decimal when the denominator
/// has no prime factors besides 2 and 5, otherwise "p/q".
std::string to_string(const Rational& value);

enum class StandardInput { H, V, DPlus, DMinus, RPlus, RMinus };

std::string to_string(StandardInput input);

/// state(h, v); normalized when the plan is resolved.
struct AmplitudePair {
  Rational h;
  Rational v;
  bool operator==(const AmplitudePair&) const = default;
};

using SignalSpec = std::variant<StandardInput, AmplitudePair>;

struct MeterDPrime {
  bool operator==(const MeterDPrime&) const = default;
};
struct MeterD {
  Rational eta;
  bool operator==(const MeterD&) const = default;
};
using MeterSpec = std::variant<MeterDPrime, MeterD, AmplitudePair>;

struct RunAction {
  bool operator==(const RunAction&) const = default;
};
struct TableAction {
  bool operator==(const TableAction&) const = default;
};
struct DensmatAction {
  bool operator==(const DensmatAction&) const = default;
};
struct SweepAction {
  Rational from;
  Rational to;
  int steps = 2;
  bool operator==(const SweepAction&) const = default;
};
using Action = std::variant<RunAction, SweepAction, TableAction, DensmatAction>;

enum class OutputFormat { Csv, Json };

struct OutputTarget {
  OutputFormat format = OutputFormat::Json;
  std::string path;
  bool operator==(const OutputTarget&) const = default;
};

/// Unset stanzas take their defaults when the plan is resolved.
struct ExperimentPlan {
  std::optional<SignalSpec> signal;
  std::optional<MeterSpec> meter;
  std::optional<Rational> eta;
  std::optional<bool> balanced_loss;
  Action action;
  std::vector<OutputTarget> outputs;

  bool operator==(const ExperimentPlan&) const = default;
};

/// 1-based position of the offending character. For an empty source the
/// position is (1, 1).
struct ParseError {
  int line = 1;
  int column = 1;
  std::string message;
  std::vector<std::string> expected;
};

struct ParseResult {
  std::optional<ExperimentPlan> plan;
  std::vector<ParseError> errors;

  bool ok() const { return plan.has_value(); }
};

ParseResult parse(std::string_view source);

/// Canonical text: one stanza per line in a fixed order, comments dropped.
std::string print_plan(const ExperimentPlan& plan);

/// "line:column: message (expected ...)" followed by the source line and a caret.
std::string render(const ParseError& error, std::string_view source);

/// Signal qubit of the plan; equal superposition when unset.
PolarizationQubit resolve_signal(const ExperimentPlan& plan);
/// Meter qubit of the plan; |D'> when unset.
PolarizationQubit resolve_meter(const ExperimentPlan& plan);
CircuitConfig resolve_config(const ExperimentPlan& plan);

}  // namespace qnd::dsl

#endif  // QND_DSL_HPP
