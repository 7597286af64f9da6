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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values come from closed forms and from the test-only
// oracles in tests/support, never from the library under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qnd/circuit.hpp"
#include "qnd/dsl.hpp"
#include "qnd/optics.hpp"
#include "qnd/sweep.hpp"
#include "support/plan_generator.hpp"
#include "support/test_util.hpp"
#include "support/two_photon_oracle.hpp"

namespace {

using namespace qnd;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail << what;
    ok = ok && condition;
  }
  void near(double actual, double expected, double tol, const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
      std::ostringstream m;
      m.precision(17);
      m << what << ": got " << actual << ", want " << expected << " +- " << tol;
      require(false, m.str());
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;  // 0 = untimed
  std::function<void(Check&)> body;
};

CircuitConfig strong() { return CircuitConfig{}; }

CircuitConfig balanced() {
  CircuitConfig config;
  config.balanced_loss = true;
  return config;
}

PolarizationQubit dprime() { return prepare_meter(1.0 / 3.0); }

OccupationVector occ(int sh, int sv, int mh, int mv) { return OccupationVector({sh, sv, mh, mv}); }

void ac1(Check& c) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const PolarizationQubit s = testing::random_qubit(rng);
    const double closed = (s.population_h() + 3.0 * s.population_v()) / 6.0;
    c.near(run(s, dprime(), strong()).success_probability, closed, 1e-12, "no loss");
    c.near(run(s, dprime(), balanced()).success_probability, 1.0 / 6.0, 1e-12, "balanced loss");
  }
}

void ac2(Check& c) {
  const double eta = 1.0 / 3.0;
  const RunOutcome v = run({0.0, 1.0}, dprime(), strong());
  c.near(v.success_probability, 0.5, 1e-12, "P(V)");
  c.near(std::abs(v.success_state.amplitude(occ(0, 1, 0, 1))), 1.0, 1e-12, "|V>s|V>m");
  const RunOutcome h = run({1.0, 0.0}, dprime(), strong());
  c.near(h.success_probability, 1.0 / 6.0, 1e-12, "P(H)");
  c.near(std::abs(h.success_state.amplitude(occ(1, 0, 1, 0))), 1.0, 1e-12, "|H>s|H>m");

  // Interaction output before the meter rotation.
  const PureState pv = interact({0.0, 1.0}, dprime(), strong());
  const double a = std::sqrt(eta / (1.0 + eta));
  c.near(std::abs(pv.amplitude(occ(0, 1, 0, 1)) - a), 0.0, 1e-12, "V: |V>s|V>m coefficient");
  c.near(std::abs(pv.amplitude(occ(0, 1, 1, 0)) - a), 0.0, 1e-12, "V: |V>s|H>m coefficient");
  c.near(std::abs(pv.amplitude(occ(1, 1, 0, 0)) - std::sqrt((1.0 - eta) / (1.0 + eta))), 0.0, 1e-12,
         "V: |H>s|V>s coefficient");
  const PureState ph = interact({1.0, 0.0}, dprime(), strong());
  const double n = 1.0 / std::sqrt(1.0 + eta);
  c.near(std::abs(ph.amplitude(occ(1, 0, 1, 0)) - n * (1.0 - 2.0 * eta)), 0.0, 1e-12, "H: |H>s|H>m coefficient");
  c.near(std::abs(ph.amplitude(occ(1, 0, 0, 1)) + n * eta), 0.0, 1e-12, "H: |H>s|V>m coefficient");
}

void ac3(Check& c) {
  constexpr int kGrid = 1000;
  int crossings = 0;
  double where = -1.0;
  double previous = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double eta = (i + 0.5) / kGrid;
    CircuitConfig config;
    config.eta = eta;
    const PureState out = interact({1.0, 0.0}, prepare_meter(eta), config);
    const double scale = std::sqrt(1.0 + eta);
    const double c_hh = std::abs(out.amplitude(occ(1, 0, 1, 0))) * scale;
    const double c_hv = std::abs(out.amplitude(occ(1, 0, 0, 1))) * scale;
    c.near(c_hh, std::abs(1.0 - 2.0 * eta), 1e-12, "|1-2eta|");
    c.near(c_hv, eta, 1e-12, "|eta|");
    const double gap = c_hh - c_hv;
    if (i > 0 && (gap > 0.0) != (previous > 0.0)) {
      ++crossings;
      where = eta;
    }
    previous = gap;
  }
  c.require(crossings == 1, "expected exactly one crossing, got " + std::to_string(crossings));
  c.near(where, 1.0 / 3.0, 1.0 / kGrid, "crossing location");
}

void ac4(Check& c) {
  for (const auto& [name, signal] : standard_inputs()) {
    const InputCharacterization r = characterize(name, signal, dprime(), strong());
    c.near(r.f_m, 1.0, 1e-12, name + " F_M");
    c.near(r.f_qnd, 1.0, 1e-12, name + " F_QND");
    c.near(r.f_qsp, 1.0, 1e-12, name + " F_QSP");
    if (name != "H" && name != "V") {
      c.near(r.joint.p_hh, 0.5, 1e-12, name + " P_HH");
      c.near(r.joint.p_vv, 0.5, 1e-12, name + " P_VV");
    }
  }
}

void ac5(Check& c) {
  std::mt19937_64 rng(505);
  auto inputs = standard_inputs();
  for (int i = 0; i < 50; ++i) inputs.emplace_back("random " + std::to_string(i), testing::random_qubit(rng));
  for (const auto& [name, signal] : inputs) {
    const ChainedOutcome out = chained_measurement(signal, dprime(), strong());
    for (int k = 0; k < 2; ++k) {
      if (out.conditional_agreement[k]) c.near(*out.conditional_agreement[k], 1.0, 1e-12, name);
    }
    c.near(out.agreement(), 1.0, 1e-12, name + " overall");
  }
}

void ac6(Check& c) {
  const SweepPoint none = sweep_point(equal_superposition(), 0.0, balanced());
  c.near(none.purity, 1.0, 1e-9, "alpha=0 purity");
  c.near(none.visibility, 1.0, 1e-9, "alpha=0 V");
  c.near(none.knowledge, 0.0, 1e-9, "alpha=0 K");
  const SweepPoint full = sweep_point(equal_superposition(), strong_alpha(), balanced());
  c.near(full.purity, 0.5, 1e-9, "alpha=sqrt(3)/2 purity");
  c.near(full.visibility, 0.0, 1e-9, "alpha=sqrt(3)/2 V");
  c.near(full.knowledge, 1.0, 1e-9, "alpha=sqrt(3)/2 K");
}

void ac7(Check& c) {
  const auto grid = alpha_grid(0.0, strong_alpha(), 50);
  const auto points = weak_sweep(equal_superposition(), grid, balanced());
  for (std::size_t i = 0; i < points.size(); ++i) {
    c.near(points[i].k2_plus_v2(), 1.0, 1e-9, "K^2+V^2 at point " + std::to_string(i));
    if (i > 0) c.require(points[i].knowledge >= points[i - 1].knowledge, "K decreases at point " + std::to_string(i));
  }
}

void ac8(Check& c) {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<JointDistribution> joints;
  for (const auto& [name, signal] : standard_inputs()) joints.push_back(joint_distribution(signal, dprime(), strong()));
  for (int i = 0; i < 200; ++i) {
    CircuitConfig config;
    config.eta = u(rng);
    config.balanced_loss = i % 2 == 0;
    const RunOutcome out = run(testing::random_qubit(rng), testing::random_qubit(rng), config);
    if (out.success_probability > 0.0) {
      joints.push_back(joint_distribution(out.success_state, AnalyzerSetting::rectilinear(),
                                          AnalyzerSetting::rectilinear()));
    }
    joints.push_back(JointDistribution::from_weights(u(rng), u(rng), u(rng), u(rng)));
  }
  for (const JointDistribution& j : joints) {
    // Floating-point agreement of two algebraically identical expressions.
    c.near(knowledge(j), 2.0 * qsp_fidelity(j) - 1.0, 1e-15, "K vs 2 F_QSP - 1");
    // sum_i p_i^m P(signal = i | meter = i)
    const BinaryDistribution pm = j.meter_marginal();
    double general = 0.0;
    if (pm.p_h > 0.0) general += pm.p_h * (j(0, 0) / pm.p_h);
    if (pm.p_v > 0.0) general += pm.p_v * (j(1, 1) / pm.p_v);
    c.near(general, j.p_hh + j.p_vv, 1e-12, "general F_QSP");
    c.near(qsp_fidelity_conditional(j), j.p_hh + j.p_vv, 1e-12, "library conditional F_QSP");
  }
}

void ac9(Check& c) {
  std::mt19937_64 rng(909);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t modes = 2 + static_cast<std::size_t>(i % 4);
    const Eigen::MatrixXcd u = testing::haar_unitary(modes, rng);
    const PureState in = testing::random_state(modes, 2, rng);
    std::vector<std::size_t> targets(modes);
    for (std::size_t k = 0; k < modes; ++k) targets[k] = k;
    const PureState out = apply_linear_optics(in, ModeTransform(u), targets);
    c.near(out.norm_squared(), 1.0, 1e-12, "norm");
    const PureState oracle = testing::TwoPhotonOracle::from_state(in).evolve(u).to_state();
    c.near(max_amplitude_difference(out, oracle), 0.0, 1e-12, "oracle agreement");
  }
  // Hong-Ou-Mandel: one photon in each input of a 50:50 splitter.
  const PureState hom = apply_linear_optics(PureState::basis({1, 1}), beam_splitter(0.5), {0, 1});
  c.near(std::abs(hom.amplitude({1, 1})), 0.0, 1e-12, "HOM coincidence amplitude");
  for (int i = 0; i < 200; ++i) {
    CircuitConfig config;
    config.eta = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    config.balanced_loss = i % 2 == 1;
    const RunOutcome out = run(testing::random_qubit(rng), testing::random_qubit(rng), config);
    c.near(out.total_probability(), 1.0, 1e-12, "outcome completeness");
  }
}

void ac10(Check& c) {
  testing::PlanGenerator generator(1010);
  for (int i = 0; i < 500; ++i) {
    const dsl::ExperimentPlan plan = generator.next();
    const std::string text = dsl::print_plan(plan);
    const dsl::ParseResult back = dsl::parse(text);
    c.require(back.ok() && *back.plan == plan, "round trip failed for:\n" + text);
  }
  std::mt19937_64 rng(1011);
  for (int i = 0; i < 2000; ++i) {
    std::string source = dsl::print_plan(generator.next());
    for (int k = 0; k < 3 && !source.empty(); ++k) {
      const std::size_t at = std::uniform_int_distribution<std::size_t>(0, source.size() - 1)(rng);
      source[at] = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
    }
    const dsl::ParseResult result = dsl::parse(source);
    c.require(result.ok() != !result.errors.empty(), "inconsistent parse result");
    for (const dsl::ParseError& e : result.errors) {
      c.require(e.line >= 1 && e.column >= 1, "error position out of range");
      dsl::render(e, source);
    }
  }
  const dsl::ParseResult sweep = dsl::parse("meter state(0.866025,0.5)\nsweep alpha 0 .. 0.866025 steps 50");
  c.require(!sweep.ok() && sweep.errors.size() == 1 &&
                sweep.errors[0].message.find("balanced_loss on") != std::string::npos,
            "sweep without balanced_loss was not rejected");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "closed-form success probability", 1.0, ac1},
      {"AC2", "eigenstate outputs", 0.0, ac2},
      {"AC3", "eta uniqueness", 1.0, ac3},
      {"AC4", "ideal joint-probability table", 1.0, ac4},
      {"AC5", "QND repeatability", 0.0, ac5},
      {"AC6", "weak-measurement endpoints", 0.0, ac6},
      {"AC7", "complementarity saturation", 5.0, ac7},
      {"AC8", "metric identities", 0.0, ac8},
      {"AC9", "physics property suite", 0.0, ac9},
      {"AC10", "parser suite", 0.0, ac10},
  };
  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.time_limit_s > 0.0 && seconds >= criterion.time_limit_s) {
      check.require(false, "took " + std::to_string(seconds) + " s");
    }
    std::printf("[%s] %-5s %s (%.3f s)%s%s\n", check.ok ? "PASS" : "FAIL", criterion.id, criterion.title, seconds,
                check.ok ? "" : ": ", check.detail.str().c_str());
    if (!check.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
