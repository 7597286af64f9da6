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

#ifndef QND_CLI_HPP
#define QND_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "qnd/circuit.hpp"
#include "qnd/dsl.hpp"

namespace qnd::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,    // parse, validation, usage and I/O errors
  kPhysicsError = 2,  // e.g. zero success probability
};

/// Experimental joint probabilities from the published coincidence data,
/// for side-by-side display only.
struct ReferenceColumn {
  const char* input;
  double p_hh, p_hv, p_vh, p_vv;
};
inline constexpr ReferenceColumn kMeasuredTable[] = {
    {"H", 0.97, 0.024, 0.007, 0.0005},
    {"V", 0.012, 0.00013, 0.18, 0.81},
    {"D+", 0.44, 0.016, 0.10, 0.44},
    {"R+", 0.46, 0.022, 0.104, 0.41},
};
inline constexpr double kMeasuredAverageQsp = 0.88;
inline constexpr double kMeasuredPurityNoMeasurement = 0.89;
inline constexpr double kMeasuredPurityStrong = 0.51;

struct TableOptions {
  bool raw_input_distribution = false;
  std::optional<std::filesystem::path> json_path;
  std::optional<std::filesystem::path> csv_path;
};

/// `qnd run <plan.qnd>`
int cmd_run(const std::filesystem::path& plan_path, std::ostream& out, std::ostream& err);

/// Executes an already parsed plan and writes its outputs.
int execute_plan(const dsl::ExperimentPlan& plan, std::ostream& out, std::ostream& err);

/// `qnd table`: the six standard inputs, strong configuration unless a plan
/// overrides the meter or circuit.
int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);
int cmd_table(const TableOptions& options, const PolarizationQubit& meter, const CircuitConfig& config,
              std::ostream& out, std::ostream& err);

/// `qnd sweep --steps N --out <csv>`: alpha from 0 to sqrt(3)/2.
int cmd_sweep(int steps, const std::filesystem::path& out_path, std::ostream& out, std::ostream& err);

/// `qnd densmat --alpha X`: equal-superposition signal, balancing loss on.
int cmd_densmat(double alpha, std::ostream& out, std::ostream& err);

}  // namespace qnd::cli

#endif  // QND_CLI_HPP
