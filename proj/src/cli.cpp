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

#include "qnd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qnd/serialize.hpp"
#include "qnd/sweep.hpp"

namespace qnd::cli {
namespace {

/// Terminal formatting; values within 1e-12 of zero print as 0.
std::string term(double value) {
  if (std::abs(value) < 1e-12) value = 0.0;
  return format_significant(value, kTerminalDigits);
}

std::string file(double value) { return format_significant(value, kFileDigits); }

bool write_file(const std::filesystem::path& path, const std::string& content, std::ostream& err) {
  std::ofstream stream(path, std::ios::binary);
  if (stream) stream << content;
  if (!stream) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

void print_row(std::ostream& out, const std::string& label, const std::vector<std::string>& cells) {
  out << std::left << std::setw(12) << label;
  for (const std::string& cell : cells) out << std::right << std::setw(10) << cell;
  out << '\n';
}

void print_characterization(std::ostream& out, const InputCharacterization& c, const RunOutcome& outcome) {
  out << "success probability  " << term(c.success_probability) << '\n';
  for (const auto& [failure, p] : outcome.failure_breakdown) {
    out << "  failure " << std::left << std::setw(14) << to_string(failure) << term(p) << '\n';
  }
  out << "joint distribution (signal, meter)\n";
  out << "  P_HH " << term(c.joint.p_hh) << "   P_HV " << term(c.joint.p_hv) << '\n';
  out << "  P_VH " << term(c.joint.p_vh) << "   P_VV " << term(c.joint.p_vv) << '\n';
  out << "p_in  (" << term(c.p_in.p_h) << ", " << term(c.p_in.p_v) << ")\n";
  out << "p_m   (" << term(c.p_m.p_h) << ", " << term(c.p_m.p_v) << ")\n";
  out << "p_out (" << term(c.p_out.p_h) << ", " << term(c.p_out.p_v) << ")\n";
  out << "F_M " << term(c.f_m) << "  F_QND " << term(c.f_qnd) << "  F_QSP " << term(c.f_qsp) << "  K "
      << term(c.k) << '\n';
}

void print_density_matrix(std::ostream& out, const QubitDensityMatrix& rho) {
  out << "signal output density matrix (H, V basis)\n";
  for (std::size_t i = 0; i < 2; ++i) {
    out << "  ";
    for (std::size_t j = 0; j < 2; ++j) {
      out << std::right << std::setw(10) << term(rho(i, j).real()) << (rho(i, j).imag() < 0 ? " - " : " + ")
          << std::left << std::setw(8) << term(std::abs(rho(i, j).imag())) + "i";
    }
    out << '\n';
  }
  out << "purity " << term(purity(rho)) << "   V " << term(visibility_from_coherence(rho)) << '\n';
}

std::string density_matrix_csv(const QubitDensityMatrix& rho) {
  std::ostringstream csv;
  csv << "row,col,re,im\n";
  const char* labels[] = {"H", "V"};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      csv << labels[i] << ',' << labels[j] << ',' << file(rho(i, j).real()) << ',' << file(rho(i, j).imag()) << '\n';
    }
  }
  return csv.str();
}

void print_sweep_summary(std::ostream& out, const std::vector<SweepPoint>& points) {
  double lo = points.front().k2_plus_v2();
  double hi = lo;
  for (const SweepPoint& p : points) {
    lo = std::min(lo, p.k2_plus_v2());
    hi = std::max(hi, p.k2_plus_v2());
  }
  out << "sweep: " << points.size() << " points, alpha " << term(points.front().alpha) << " .. "
      << term(points.back().alpha) << '\n';
  out << "K^2+V^2 min " << file(lo) << "  max " << file(hi) << '\n';
}

nlohmann::json sweep_json(const std::vector<SweepPoint>& points) {
  nlohmann::json rows = nlohmann::json::array();
  for (const SweepPoint& p : points) {
    rows.push_back({{"alpha", round_significant(p.alpha)},
                    {"K", round_significant(p.knowledge)},
                    {"V", round_significant(p.visibility)},
                    {"K2plusV2", round_significant(p.k2_plus_v2())},
                    {"purity", round_significant(p.purity)},
                    {"p_success", round_significant(p.success_probability)}});
  }
  return rows;
}

int run_action(const PolarizationQubit& signal, const PolarizationQubit& meter, const CircuitConfig& config,
               const std::vector<dsl::OutputTarget>& outputs, std::ostream& out, std::ostream& err) {
  const RunOutcome outcome = run(signal, meter, config);
  const InputCharacterization c = characterize("plan", signal, meter, config);
  print_characterization(out, c, outcome);
  for (const dsl::OutputTarget& target : outputs) {
    std::string content;
    if (target.format == dsl::OutputFormat::Json) {
      nlohmann::json doc = to_json(outcome);
      doc["joint"] = to_json(c.joint);
      doc["metrics"] = to_json(c);
      content = doc.dump(2) + "\n";
    } else {
      content = "p_success,P_HH,P_HV,P_VH,P_VV,F_M,F_QND,F_QSP,K\n" + file(c.success_probability) + ',' +
                file(c.joint.p_hh) + ',' + file(c.joint.p_hv) + ',' + file(c.joint.p_vh) + ',' + file(c.joint.p_vv) +
                ',' + file(c.f_m) + ',' + file(c.f_qnd) + ',' + file(c.f_qsp) + ',' + file(c.k) + '\n';
    }
    if (!write_file(target.path, content, err)) return kUsageError;
  }
  return kOk;
}

int sweep_action(const PolarizationQubit& signal, const std::vector<double>& alphas, const CircuitConfig& config,
                 const std::vector<dsl::OutputTarget>& outputs, std::ostream& out, std::ostream& err) {
  const std::vector<SweepPoint> points = weak_sweep(signal, alphas, config);
  print_sweep_summary(out, points);
  for (const dsl::OutputTarget& target : outputs) {
    std::string content;
    if (target.format == dsl::OutputFormat::Csv) {
      std::ostringstream csv;
      write_sweep_csv(csv, points);
      content = csv.str();
    } else {
      content = sweep_json(points).dump(2) + "\n";
    }
    if (!write_file(target.path, content, err)) return kUsageError;
  }
  return kOk;
}

int densmat_action(const PolarizationQubit& signal, const PolarizationQubit& meter, const CircuitConfig& config,
                   const std::vector<dsl::OutputTarget>& outputs, std::ostream& out, std::ostream& err) {
  const QubitDensityMatrix rho = signal_output_density_matrix(signal, meter, config);
  print_density_matrix(out, rho);
  for (const dsl::OutputTarget& target : outputs) {
    const std::string content = target.format == dsl::OutputFormat::Json ? to_json(rho).dump(2) + "\n"
                                                                         : density_matrix_csv(rho);
    if (!write_file(target.path, content, err)) return kUsageError;
  }
  return kOk;
}

template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ZeroSuccessProbability& e) {
    err << "error: " << e.what() << '\n';
    return kPhysicsError;
  } catch (const DualRailError& e) {
    err << "error: " << e.what() << '\n';
    return kPhysicsError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace

int cmd_run(const std::filesystem::path& plan_path, std::ostream& out, std::ostream& err) {
  std::ifstream stream(plan_path, std::ios::binary);
  if (!stream) {
    err << "error: cannot read " << plan_path.string() << '\n';
    return kUsageError;
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  const std::string source = buffer.str();

  const dsl::ParseResult parsed = dsl::parse(source);
  if (!parsed.ok()) {
    for (const dsl::ParseError& error : parsed.errors) err << plan_path.string() << ':' << dsl::render(error, source);
    return kUsageError;
  }
  return execute_plan(*parsed.plan, out, err);
}

int execute_plan(const dsl::ExperimentPlan& plan, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const PolarizationQubit signal = dsl::resolve_signal(plan);
    const PolarizationQubit meter = dsl::resolve_meter(plan);
    const CircuitConfig config = dsl::resolve_config(plan);

    if (std::holds_alternative<dsl::RunAction>(plan.action)) {
      return run_action(signal, meter, config, plan.outputs, out, err);
    }
    if (const auto* sweep = std::get_if<dsl::SweepAction>(&plan.action)) {
      return sweep_action(signal, alpha_grid(sweep->from.value(), sweep->to.value(), sweep->steps), config,
                          plan.outputs, out, err);
    }
    if (std::holds_alternative<dsl::DensmatAction>(plan.action)) {
      return densmat_action(signal, meter, config, plan.outputs, out, err);
    }
    TableOptions options;
    for (const dsl::OutputTarget& target : plan.outputs) {
      (target.format == dsl::OutputFormat::Json ? options.json_path : options.csv_path) = target.path;
    }
    return cmd_table(options, meter, config, out, err);
  });
}

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
  return cmd_table(options, prepare_meter(kStrongEta), CircuitConfig{}, out, err);
}

int cmd_table(const TableOptions& options, const PolarizationQubit& meter, const CircuitConfig& config,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const InputDistribution mode =
        options.raw_input_distribution ? InputDistribution::Raw : InputDistribution::SuccessConditioned;
    std::vector<InputCharacterization> rows;
    for (const auto& [name, signal] : standard_inputs()) rows.push_back(characterize(name, signal, meter, config, mode));

    double qsp_sum = 0.0;
    for (const auto& c : rows) qsp_sum += c.f_qsp;
    const double qsp_average = qsp_sum / static_cast<double>(rows.size());

    out << "ideal simulation: eta " << term(config.eta) << ", balanced loss " << (config.balanced_loss ? "on" : "off")
        << ", p_in " << (options.raw_input_distribution ? "raw" : "success-conditioned") << '\n';
    std::vector<std::string> names;
    for (const auto& c : rows) names.push_back(c.name);
    print_row(out, "", names);
    const auto row = [&](const std::string& label, auto field) {
      std::vector<std::string> cells;
      for (const auto& c : rows) cells.push_back(term(field(c)));
      print_row(out, label, cells);
    };
    row("P_HH", [](const InputCharacterization& c) { return c.joint.p_hh; });
    row("P_HV", [](const InputCharacterization& c) { return c.joint.p_hv; });
    row("P_VH", [](const InputCharacterization& c) { return c.joint.p_vh; });
    row("P_VV", [](const InputCharacterization& c) { return c.joint.p_vv; });
    row("F_M", [](const InputCharacterization& c) { return c.f_m; });
    row("F_QND", [](const InputCharacterization& c) { return c.f_qnd; });
    row("F_QSP", [](const InputCharacterization& c) { return c.f_qsp; });
    row("K", [](const InputCharacterization& c) { return c.k; });
    row("P_success", [](const InputCharacterization& c) { return c.success_probability; });
    out << "average F_QSP over six inputs: " << term(qsp_average) << "\n\n";

    out << "paper (experimental)\n";
    std::vector<std::string> ref_names;
    for (const auto& ref : kMeasuredTable) ref_names.push_back(ref.input);
    print_row(out, "", ref_names);
    const auto ref_row = [&](const std::string& label, double ReferenceColumn::*field) {
      std::vector<std::string> cells;
      for (const auto& ref : kMeasuredTable) cells.push_back(term(ref.*field));
      print_row(out, label, cells);
    };
    ref_row("P_HH", &ReferenceColumn::p_hh);
    ref_row("P_HV", &ReferenceColumn::p_hv);
    ref_row("P_VH", &ReferenceColumn::p_vh);
    ref_row("P_VV", &ReferenceColumn::p_vv);
    out << "average F_QSP over six inputs: " << term(kMeasuredAverageQsp) << '\n';

    if (options.json_path) {
      nlohmann::json doc;
      doc["config"] = {{"eta", round_significant(config.eta)},
                       {"balanced_loss", config.balanced_loss},
                       {"input_distribution", options.raw_input_distribution ? "raw" : "success-conditioned"}};
      doc["inputs"] = nlohmann::json::array();
      for (const auto& c : rows) {
        nlohmann::json block = to_json(c);
        block["joint"] = to_json(c.joint);
        block["success_probability"] = round_significant(c.success_probability);
        doc["inputs"].push_back(std::move(block));
      }
      doc["average_F_QSP"] = round_significant(qsp_average);
      nlohmann::json reference = nlohmann::json::array();
      for (const auto& ref : kMeasuredTable) {
        reference.push_back({{"input", ref.input},
                             {"P_HH", ref.p_hh},
                             {"P_HV", ref.p_hv},
                             {"P_VH", ref.p_vh},
                             {"P_VV", ref.p_vv}});
      }
      doc["experimental_reference"] = {{"columns", std::move(reference)}, {"average_F_QSP", kMeasuredAverageQsp}};
      if (!write_file(*options.json_path, doc.dump(2) + "\n", err)) return kUsageError;
    }
    if (options.csv_path) {
      std::ostringstream csv;
      csv << "input,p_success,P_HH,P_HV,P_VH,P_VV,F_M,F_QND,F_QSP,K\n";
      for (const auto& c : rows) {
        csv << c.name << ',' << file(c.success_probability) << ',' << file(c.joint.p_hh) << ','
            << file(c.joint.p_hv) << ',' << file(c.joint.p_vh) << ',' << file(c.joint.p_vv) << ',' << file(c.f_m)
            << ',' << file(c.f_qnd) << ',' << file(c.f_qsp) << ',' << file(c.k) << '\n';
      }
      if (!write_file(*options.csv_path, csv.str(), err)) return kUsageError;
    }
    return kOk;
  });
}

int cmd_sweep(int steps, const std::filesystem::path& out_path, std::ostream& out, std::ostream& err) {
  if (steps < 2) {
    err << "error: --steps must be at least 2\n";
    return kUsageError;
  }
  CircuitConfig config;
  config.balanced_loss = true;
  return guarded(err, [&] {
    return sweep_action(equal_superposition(), alpha_grid(0.0, strong_alpha(), steps), config,
                        {{dsl::OutputFormat::Csv, out_path.string()}}, out, err);
  });
}

int cmd_densmat(double alpha, std::ostream& out, std::ostream& err) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    err << "error: --alpha must lie in [0, 1]\n";
    return kUsageError;
  }
  CircuitConfig config;
  config.balanced_loss = true;
  return guarded(err, [&]() -> int {
    const SweepPoint point = sweep_point(equal_superposition(), alpha, config);
    out << "meter alpha " << term(alpha) << ", signal (|H>+|V>)/sqrt(2), balanced loss on\n";
    const int code = densmat_action(equal_superposition(), weak_meter(alpha), config, {}, out, err);
    out << "K " << term(point.knowledge) << "   K^2+V^2 " << term(point.k2_plus_v2()) << "   P_success "
        << term(point.success_probability) << '\n';
    if (alpha == 0.0) {
      out << "paper (experimental) purity " << term(kMeasuredPurityNoMeasurement) << '\n';
    } else if (std::abs(alpha - strong_alpha()) < 1e-6) {
      out << "paper (experimental) purity " << term(kMeasuredPurityStrong) << '\n';
    }
    return code;
  });
}

}  // namespace qnd::cli
