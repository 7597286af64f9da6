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

#ifndef QND_TESTS_TEST_UTIL_HPP
#define QND_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "qnd/circuit.hpp"
#include "qnd/fock.hpp"

namespace qnd::testing {

inline Complex complex_gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  return {normal(rng), normal(rng)};
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// R's diagonal moved into Q.
inline Eigen::MatrixXcd haar_unitary(std::size_t n, std::mt19937_64& rng) {
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = complex_gaussian(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

/// Random normalized state over every occupation of `modes` modes holding
/// exactly `photons` photons.
inline PureState random_state(std::size_t modes, int photons, std::mt19937_64& rng,
                              int capacity = kDefaultMaxPhotons) {
  PureState state(modes, capacity);
  for (const auto& occupation : enumerate_occupations(modes, photons)) state.add(occupation, complex_gaussian(rng));
  return state.normalized();
}

inline PolarizationQubit random_qubit(std::mt19937_64& rng) {
  return PolarizationQubit::normalized(complex_gaussian(rng), complex_gaussian(rng));
}

}  // namespace qnd::testing

#endif  // QND_TESTS_TEST_UTIL_HPP
