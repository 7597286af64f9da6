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

#ifndef QND_SRC_SWEEP_DETAIL_HPP
#define QND_SRC_SWEEP_DETAIL_HPP

#include <span>

#include "qnd/circuit.hpp"

namespace qnd::detail {

void check_sweep(std::span<const double> alphas, const CircuitConfig& config);

}  // namespace qnd::detail

#endif  // QND_SRC_SWEEP_DETAIL_HPP
