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

#ifndef QND_OPTICS_HPP
#define QND_OPTICS_HPP

#include "qnd/mode_transform.hpp"

namespace qnd {

double degrees_to_radians(double degrees);

/// Beam splitter of reflectivity `eta` on (s-side, m-side):
///
///   [[-sqrt(eta), sqrt(1-eta)],
///    [ sqrt(1-eta), sqrt(eta)]]
///
/// The minus sign sits on the reflected s-side amplitude.
ModeTransform beam_splitter(double eta);

/// Half-wave plate with fast axis at `theta` radians on an (H, V) pair:
/// [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
ModeTransform half_wave_plate(double theta);

/// Quarter-wave plate with fast axis at `theta` radians, R(t) diag(1, i) R(-t).
/// Two of them at the same angle compose to half_wave_plate(theta) exactly.
ModeTransform quarter_wave_plate(double theta);

/// Couples a lossy mode to a vacuum ancilla: a photon survives with amplitude
/// sqrt(1 - fraction) and is diverted with amplitude sqrt(fraction).
/// Acts on (lossy mode, ancilla).
ModeTransform loss_channel(double fraction);

/// Exchanges the two modes of a pair.
ModeTransform mode_swap();

}  // namespace qnd

#endif  // QND_OPTICS_HPP
