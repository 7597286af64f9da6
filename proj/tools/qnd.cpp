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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qnd/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Ideal simulator for a linear-optics non-demolition polarization measurement"};
  app.require_subcommand(1);

  std::string plan_path;
  auto* run = app.add_subcommand("run", "Execute an experiment plan (.qnd)");
  run->add_option("plan", plan_path, "Plan file")->required();

  qnd::cli::TableOptions table_options;
  std::string table_json;
  auto* table = app.add_subcommand("table", "Joint distributions and fidelities for the six standard inputs");
  table->add_flag("--raw-input-dist", table_options.raw_input_distribution,
                  "Use the prepared input populations instead of the success-conditioned ones");
  table->add_option("--json", table_json, "Write the metrics report to this path");

  int steps = 50;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Weak-measurement sweep of the meter amplitude alpha");
  sweep->add_option("--steps", steps, "Number of alpha values, endpoints included")->required();
  sweep->add_option("--out", sweep_out, "CSV output path")->required();

  double alpha = 0.0;
  auto* densmat = app.add_subcommand("densmat", "Signal output density matrix for a given meter alpha");
  densmat->add_option("--alpha", alpha, "Meter H amplitude in [0, 1]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qnd::cli::kUsageError;
  }

  if (*run) return qnd::cli::cmd_run(plan_path, std::cout, std::cerr);
  if (*table) {
    if (!table_json.empty()) table_options.json_path = table_json;
    return qnd::cli::cmd_table(table_options, std::cout, std::cerr);
  }
  if (*sweep) return qnd::cli::cmd_sweep(steps, sweep_out, std::cout, std::cerr);
  if (*densmat) return qnd::cli::cmd_densmat(alpha, std::cout, std::cerr);
  return qnd::cli::kUsageError;
}
