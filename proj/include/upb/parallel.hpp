// Copyright 2026 The UPB Dimer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Point-parallel map over independent scan evaluations. Results are stored
// by input index, so the output order never depends on scheduling.

namespace upb {

enum class Execution { serial, parallel };

/// Worker count for parallel scans: UPB_THREADS when set to a positive
/// integer, otherwise the OpenMP default.
int thread_limit();

/// Serial reference loop.
template <class R, class F>
std::vector<R> map_points_serial(std::size_t count, F&& fn) {
  std::vector<R> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

/// OpenMP work queue. `fn` must not throw; callers record failures in R.
template <class R, class F>
std::vector<R> map_points_parallel(std::size_t count, F&& fn) {
  std::vector<R> out(count);
  const long n = static_cast<long>(count);
  const int threads = thread_limit();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  return out;
}

template <class R, class F>
std::vector<R> map_points(std::size_t count, F&& fn, Execution exec) {
  if (exec == Execution::serial) return map_points_serial<R>(count, fn);
  return map_points_parallel<R>(count, fn);
}

std::string to_string(Execution exec);

}  // namespace upb
