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

#ifndef QND_MODE_TRANSFORM_HPP
#define QND_MODE_TRANSFORM_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qnd {

using Complex = std::complex<double>;

/// Unitary acting on the creation operators of a subset of optical modes.
///
/// Column j holds the image of input mode j: a†_j -> sum_k m(k, j) a†_k.
/// For single-photon amplitudes this is the usual Jones-matrix action.
class ModeTransform {
 public:
  static constexpr double kUnitarityTolerance = 1e-10;

  /// Throws std::invalid_argument unless `matrix` is square and unitary
  /// within kUnitarityTolerance.
  explicit ModeTransform(Eigen::MatrixXcd matrix);

  static ModeTransform identity(std::size_t arity);

  std::size_t arity() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  /// Largest entry of |U U† - I|.
  double unitarity_error() const;

  ModeTransform adjoint() const;

 private:
  Eigen::MatrixXcd matrix_;
};

/// `second * first` applies `first`, then `second`.
ModeTransform operator*(const ModeTransform& second, const ModeTransform& first);

double unitarity_error(const Eigen::MatrixXcd& matrix);

}  // namespace qnd

#endif  // QND_MODE_TRANSFORM_HPP
