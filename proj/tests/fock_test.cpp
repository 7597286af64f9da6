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

#include "qnd/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "qnd/optics.hpp"
#include "support/test_util.hpp"
#include "support/two_photon_oracle.hpp"

namespace qnd {
namespace {

constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Permanent-based amplitude <out| U |in> = Perm(U[out rows, in cols]) /
// sqrt(prod n_in! prod n_out!). Brute force over permutations.
Complex permanent_amplitude(const Eigen::MatrixXcd& u, const OccupationVector& in, const OccupationVector& out) {
  std::vector<Eigen::Index> rows, cols;
  double norm = 1.0;
  for (std::size_t mode = 0; mode < in.mode_count(); ++mode) {
    for (int n = 0; n < in[mode]; ++n) cols.push_back(static_cast<Eigen::Index>(mode));
    for (int n = 0; n < out[mode]; ++n) rows.push_back(static_cast<Eigen::Index>(mode));
    for (int n = 2; n <= in[mode]; ++n) norm *= n;
    for (int n = 2; n <= out[mode]; ++n) norm *= n;
  }
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  Complex sum;
  do {
    Complex term = 1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) term *= u(rows[i], cols[perm[i]]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / std::sqrt(norm);
}

TEST(OccupationVector, RejectsNegativeCounts) {
  EXPECT_THROW(OccupationVector({1, -1}), std::invalid_argument);
}

TEST(OccupationVector, OrdersLexicographically) {
  EXPECT_LT(OccupationVector({0, 1}), OccupationVector({1, 0}));
  EXPECT_EQ(to_string(OccupationVector({1, 0, 2})), "|1,0,2>");
}

TEST(EnumerateOccupations, CountsMatchStarsAndBars) {
  EXPECT_EQ(enumerate_occupations(4, 2).size(), 10u);
  EXPECT_EQ(enumerate_occupations(6, 3).size(), 56u);
  const auto occupations = enumerate_occupations(3, 2);
  EXPECT_TRUE(std::is_sorted(occupations.begin(), occupations.end()));
}

TEST(Tensor, ProductOfUnits) {
  const PureState a = PureState::basis({1});
  const PureState b = PureState::basis({1});
  const PureState ab = tensor(a, b);
  EXPECT_EQ(ab.mode_count(), 2u);
  EXPECT_EQ(ab.amplitude({1, 1}), Complex(1.0));
}

TEST(Tensor, IdentityFactor) {
  const Complex alpha(0.6, 0.0), beta(0.0, 0.8);
  const PureState a = PureState::vacuum(1);
  const PureState b = PureState::from_terms(1, {{{0}, alpha}, {{1}, beta}});
  const PureState ab = tensor(a, b);
  EXPECT_EQ(ab.amplitude({0, 0}), alpha);
  EXPECT_EQ(ab.amplitude({0, 1}), beta);
  EXPECT_NEAR(ab.norm_squared(), a.norm_squared() * b.norm_squared(), kTol);
}

TEST(Tensor, Distributivity) {
  const PureState a = PureState::from_terms(2, {{{1, 0}, kInvSqrt2}, {{0, 1}, kInvSqrt2}});
  const PureState ab = tensor(a, PureState::basis({1}));
  EXPECT_EQ(ab.terms().size(), 2u);
  EXPECT_NEAR(std::abs(ab.amplitude({1, 0, 1}) - kInvSqrt2), 0.0, kTol);
  EXPECT_NEAR(std::abs(ab.amplitude({0, 1, 1}) - kInvSqrt2), 0.0, kTol);
}

TEST(Tensor, CapacityExceeded) {
  const PureState two = PureState::basis({2});
  EXPECT_THROW(tensor(two, PureState::basis({1})), CapacityError);
  EXPECT_NO_THROW(tensor(PureState::basis({2}, 3), PureState::basis({1})));
}

TEST(ApplyLinearOptics, SignalPhotonThroughOneThirdSplitter) {
  // One photon in s_H, modes (s_H, m_H).
  const PureState out = apply_linear_optics(PureState::basis({1, 0}), beam_splitter(1.0 / 3.0), {0, 1});
  EXPECT_NEAR(std::abs(out.amplitude({1, 0}) - Complex(-std::sqrt(1.0 / 3.0))), 0.0, kTol);
  EXPECT_NEAR(std::abs(out.amplitude({0, 1}) - Complex(std::sqrt(2.0 / 3.0))), 0.0, kTol);
}

TEST(ApplyLinearOptics, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(7);
  const PureState state = testing::random_state(3, 2, rng);
  const PureState out = apply_linear_optics(state, ModeTransform::identity(2), {0, 2});
  EXPECT_LT(max_amplitude_difference(state, out), kTol);
}

TEST(ApplyLinearOptics, HongOuMandelDip) {
  // Oracle, by hand: a0† a1† -> (a0† + a1†)(a0† - a1†)/2 = (a0†² - a1†²)/2,
  // and a†²|0> = sqrt(2)|2>, giving (|2,0> - |0,2>)/sqrt(2).
  const PureState out = apply_linear_optics(PureState::basis({1, 1}), half_wave_plate(degrees_to_radians(22.5)), {0, 1});
  EXPECT_NEAR(std::abs(out.amplitude({2, 0}) - kInvSqrt2), 0.0, kTol);
  EXPECT_NEAR(std::abs(out.amplitude({0, 2}) + kInvSqrt2), 0.0, kTol);
  EXPECT_NEAR(std::abs(out.amplitude({1, 1})), 0.0, kTol);

  const PureState balanced = apply_linear_optics(PureState::basis({1, 1}), beam_splitter(0.5), {0, 1});
  EXPECT_NEAR(std::abs(balanced.amplitude({1, 1})), 0.0, kTol);
}

TEST(ApplyLinearOptics, RejectsBadTargets) {
  const PureState state = PureState::basis({1, 0, 0});
  EXPECT_THROW(apply_linear_optics(state, beam_splitter(0.5), {0, 3}), std::out_of_range);
  EXPECT_THROW(apply_linear_optics(state, beam_splitter(0.5), {1, 1}), std::invalid_argument);
  EXPECT_THROW(apply_linear_optics(state, beam_splitter(0.5), {0}), std::invalid_argument);
}

TEST(ModeTransform, RejectsNonUnitary) {
  Eigen::MatrixXcd m(2, 2);
  m << 1.0, 0.0, 0.0, 0.5;
  EXPECT_THROW(ModeTransform{m}, std::invalid_argument);
  EXPECT_THROW(ModeTransform{Eigen::MatrixXcd(2, 3)}, std::invalid_argument);
}

TEST(ApplyLinearOptics, NormPreservedAndMatchesOracleForRandomUnitaries) {
  std::mt19937_64 rng(20240611);
  constexpr std::size_t kModes = 4;
  for (int trial = 0; trial < 1000; ++trial) {
    const PureState state = testing::random_state(kModes, 2, rng);
    const std::size_t arity = 2 + static_cast<std::size_t>(trial % 3);
    std::vector<std::size_t> targets(kModes);
    std::iota(targets.begin(), targets.end(), 0);
    std::shuffle(targets.begin(), targets.end(), rng);
    targets.resize(arity);

    const Eigen::MatrixXcd u = testing::haar_unitary(arity, rng);
    const PureState out = apply_linear_optics(state, ModeTransform(u), targets);
    ASSERT_LT(std::abs(out.norm_squared() - state.norm_squared()), kTol) << "trial " << trial;

    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(kModes, kModes);
    for (std::size_t r = 0; r < arity; ++r) {
      for (std::size_t c = 0; c < arity; ++c) {
        full(static_cast<Eigen::Index>(targets[r]), static_cast<Eigen::Index>(targets[c])) =
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      }
    }
    const PureState expected = testing::TwoPhotonOracle::from_state(state).evolve(full).to_state();
    ASSERT_LT(max_amplitude_difference(out, expected), 1e-12) << "trial " << trial;
  }
}

TEST(ApplyLinearOptics, CompositionMatchesMatrixProduct) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const PureState state = testing::random_state(3, 2, rng);
    const ModeTransform u(testing::haar_unitary(3, rng));
    const ModeTransform v(testing::haar_unitary(3, rng));
    const PureState sequential = apply_linear_optics(apply_linear_optics(state, u, {0, 1, 2}), v, {0, 1, 2});
    const PureState composed = apply_linear_optics(state, v * u, {0, 1, 2});
    ASSERT_LT(max_amplitude_difference(sequential, composed), kTol);
  }
}

TEST(ApplyLinearOptics, HigherPhotonNumbersMatchPermanents) {
  std::mt19937_64 rng(4242);
  for (const int photons : {3, 4}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Eigen::MatrixXcd u = testing::haar_unitary(3, rng);
      const auto inputs = enumerate_occupations(3, photons);
      const OccupationVector& in = inputs[static_cast<std::size_t>(trial) % inputs.size()];
      const PureState out = apply_linear_optics(PureState::basis(in, photons), ModeTransform(u), {0, 1, 2});
      EXPECT_NEAR(out.norm_squared(), 1.0, kTol);
      for (const auto& occupation : enumerate_occupations(3, photons)) {
        ASSERT_LT(std::abs(out.amplitude(occupation) - permanent_amplitude(u, in, occupation)), 1e-12)
            << to_string(in) << " -> " << to_string(occupation);
      }
    }
  }
}

TEST(ProjectPattern, FullSupport) {
  const Projection p = project_pattern(PureState::basis({1, 0}), {1, std::nullopt});
  EXPECT_FALSE(p.impossible());
  EXPECT_NEAR(p.probability, 1.0, kTol);
  EXPECT_EQ(p.branch.amplitude({1, 0}), Complex(1.0));
}

TEST(ProjectPattern, HalfWeightBranchIsRenormalized) {
  const PureState state = PureState::from_terms(2, {{{1, 0}, kInvSqrt2}, {{0, 1}, kInvSqrt2}});
  const Projection p = project_pattern(state, {1, std::nullopt});
  EXPECT_NEAR(p.probability, 0.5, kTol);
  EXPECT_NEAR(std::abs(p.branch.amplitude({1, 0}) - 1.0), 0.0, kTol);
  EXPECT_EQ(p.branch.terms().size(), 1u);
}

TEST(ProjectPattern, VEigenstateOutputHasOneMeterPhotonWithProbabilityOneHalf) {
  // (1/2)|V>_s(|V>_m + |H>_m) + sqrt(1/2)|H>_s|V>_s over (s_H, s_V, m_H, m_V).
  const PureState phi = PureState::from_terms(
      4, {{{0, 1, 0, 1}, 0.5}, {{0, 1, 1, 0}, 0.5}, {{1, 1, 0, 0}, std::sqrt(0.5)}});
  const double p = project_pattern(phi, {std::nullopt, std::nullopt, 1, 0}).probability +
                   project_pattern(phi, {std::nullopt, std::nullopt, 0, 1}).probability;
  EXPECT_NEAR(p, 0.5, kTol);
}

TEST(ProjectPattern, ImpossibleBranchIsFlagged) {
  const Projection p = project_pattern(PureState::basis({1, 0}), {0, std::nullopt});
  EXPECT_TRUE(p.impossible());
  EXPECT_EQ(p.probability, 0.0);
  EXPECT_THROW(project_pattern(PureState::basis({1, 0}), {0}), std::invalid_argument);
}

TEST(ProjectPattern, ExhaustivePatternsSumToOne) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState state = testing::random_state(3, 2, rng);
    double total = 0.0;
    for (int n0 = 0; n0 <= 2; ++n0) {
      for (int n1 = 0; n1 <= 2; ++n1) total += project_pattern(state, {n0, n1, std::nullopt}).probability;
    }
    ASSERT_NEAR(total, 1.0, kTol);
  }
}

TEST(ReduceToQubit, ProductStateGivesPureH) {
  const PureState state = tensor(PureState::basis({1, 0}), PureState::from_terms(2, {{{1, 0}, 0.6}, {{0, 1}, 0.8}}));
  const QubitDensityMatrix rho = reduce_to_qubit(state, 0, 1);
  EXPECT_NEAR(rho(0, 0).real(), 1.0, kTol);
  EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, kTol);
  EXPECT_NEAR(rho(1, 1).real(), 0.0, kTol);
}

TEST(ReduceToQubit, MaximallyEntangledGivesMixed) {
  const PureState bell = PureState::from_terms(4, {{{1, 0, 1, 0}, kInvSqrt2}, {{0, 1, 0, 1}, kInvSqrt2}});
  const QubitDensityMatrix rho = reduce_to_qubit(bell, 0, 1);
  EXPECT_NEAR(rho(0, 0).real(), 0.5, kTol);
  EXPECT_NEAR(rho(1, 1).real(), 0.5, kTol);
  EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, kTol);
  EXPECT_NEAR(purity(rho), 0.5, kTol);
}

TEST(ReduceToQubit, ReportsBrokenDualRail) {
  const PureState state = PureState::from_terms(3, {{{1, 0, 1}, kInvSqrt2}, {{1, 1, 0}, kInvSqrt2}});
  try {
    reduce_to_qubit(state, 0, 1);
    FAIL() << "expected DualRailError";
  } catch (const DualRailError& e) {
    EXPECT_EQ(e.offending(), OccupationVector({1, 1, 0}));
  }
}

TEST(ReduceToQubit, RandomDualRailStatesSatisfyDensityInvariants) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    // One photon in (0, 1) and one photon anywhere in modes 2..4.
    PureState state(5);
    for (int q = 0; q < 2; ++q) {
      for (int e = 2; e < 5; ++e) {
        std::vector<int> counts(5, 0);
        counts[static_cast<std::size_t>(q)] = 1;
        counts[static_cast<std::size_t>(e)] = 1;
        state.add(OccupationVector(counts), testing::complex_gaussian(rng));
      }
    }
    const QubitDensityMatrix rho = reduce_to_qubit(state, 0, 1);  // constructor enforces the invariants
    const double p = purity(rho);
    ASSERT_GE(p, 0.5 - kTol);
    ASSERT_LE(p, 1.0 + kTol);
  }
}

TEST(QubitDensityMatrix, RejectsInvalidEntries) {
  EXPECT_THROW(QubitDensityMatrix(1.0, 0.0, 0.0, 1.0), std::invalid_argument);           // trace 2
  EXPECT_THROW(QubitDensityMatrix(0.5, 0.3, 0.1, 0.5), std::invalid_argument);           // not Hermitian
  EXPECT_THROW(QubitDensityMatrix(0.5, 0.7, 0.7, 0.5), std::invalid_argument);           // negative eigenvalue
  EXPECT_NO_THROW(QubitDensityMatrix(0.5, Complex(0, 0.5), Complex(0, -0.5), 0.5));
}

TEST(Purity, PureAndMaximallyMixed) {
  EXPECT_NEAR(purity(QubitDensityMatrix(1.0, 0.0, 0.0, 0.0)), 1.0, kTol);
  EXPECT_NEAR(purity(QubitDensityMatrix(0.5, 0.0, 0.0, 0.5)), 0.5, kTol);
  EXPECT_NEAR(purity(QubitDensityMatrix::pure(kInvSqrt2, Complex(0, kInvSqrt2))), 1.0, kTol);
}

}  // namespace
}  // namespace qnd
