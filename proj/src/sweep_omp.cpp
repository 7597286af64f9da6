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

#include <cstdlib>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qnd/sweep.hpp"
#include "sweep_detail.hpp"

namespace qnd {

int sweep_thread_count() {
#ifdef _OPENMP
  const int available = omp_get_max_threads();
#else
  const int available = 1;
#endif
  if (const char* env = std::getenv("QND_THREADS")) {
    try {
      const int requested = std::stoi(env);
      if (requested > 0) return requested < available ? requested : available;
    } catch (const std::exception&) {
      // ignored; falls back to the OpenMP default
    }
  }
  return available;
}

std::vector<SweepPoint> weak_sweep(const PolarizationQubit& signal, std::span<const double> alphas,
                                   const CircuitConfig& config, int threads) {
  detail::check_sweep(alphas, config);
  if (threads <= 0) threads = sweep_thread_count();

  std::vector<SweepPoint> points(alphas.size());
  std::exception_ptr failure;
  const long long n = static_cast<long long>(alphas.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    try {
      points[static_cast<std::size_t>(i)] = sweep_point(signal, alphas[static_cast<std::size_t>(i)], config);
    } catch (...) {
#pragma omp critical(qnd_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return points;
}

}  // namespace qnd
