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

#include "qnd/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qnd {
namespace {

void check_unit_interval(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

Eigen::MatrixXcd two_by_two(Complex a, Complex b, Complex c, Complex d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

// ModeTransform

double unitarity_error(const Eigen::MatrixXcd& matrix) {
  const Eigen::MatrixXcd product = matrix * matrix.adjoint();
  return (product - Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols())).cwiseAbs().maxCoeff();
}

ModeTransform::ModeTransform(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("mode transform must be a non-empty square matrix");
  }
  const double error = qnd::unitarity_error(matrix_);
  if (!(error <= kUnitarityTolerance)) {
    throw std::invalid_argument("mode transform is not unitary (|UU^dag - I| = " + std::to_string(error) + ")");
  }
}

ModeTransform ModeTransform::identity(std::size_t arity) {
  const auto n = static_cast<Eigen::Index>(arity);
  return ModeTransform(Eigen::MatrixXcd::Identity(n, n));
}

double ModeTransform::unitarity_error() const { return qnd::unitarity_error(matrix_); }

ModeTransform ModeTransform::adjoint() const { return ModeTransform(matrix_.adjoint()); }

ModeTransform operator*(const ModeTransform& second, const ModeTransform& first) {
  if (second.arity() != first.arity()) throw std::invalid_argument("cannot compose transforms of different arity");
  return ModeTransform(second.matrix() * first.matrix());
}

// Elements

double degrees_to_radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

ModeTransform beam_splitter(double eta) {
  check_unit_interval(eta, "beam splitter reflectivity");
  const double r = std::sqrt(eta);
  const double t = std::sqrt(1.0 - eta);
  return ModeTransform(two_by_two(-r, t, t, r));
}

ModeTransform half_wave_plate(double theta) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  return ModeTransform(two_by_two(c, s, s, -c));
}

ModeTransform quarter_wave_plate(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex i(0.0, 1.0);
  const Complex off = (1.0 - i) * s * c;
  return ModeTransform(two_by_two(c * c + i * s * s, off, off, s * s + i * c * c));
}

ModeTransform loss_channel(double fraction) {
  check_unit_interval(fraction, "loss fraction");
  const double keep = std::sqrt(1.0 - fraction);
  const double lose = std::sqrt(fraction);
  return ModeTransform(two_by_two(keep, -lose, lose, keep));
}

ModeTransform mode_swap() { return ModeTransform(two_by_two(0.0, 1.0, 1.0, 0.0)); }

}  // namespace qnd
