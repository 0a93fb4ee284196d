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

#include <functional>
#include <vector>

// Derivative-free local minimisation (Nelder-Mead simplex).

namespace upb::optimize {

struct SimplexOptions {
  double initial_step = 0.05;
  double size_tolerance = 1e-10;
  int max_iterations = 500;
};

struct Minimum {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(const std::vector<double>&)>;

Minimum nelder_mead(const Objective& f, std::vector<double> start,
                    SimplexOptions opts = {});

/// Restarts from the previous best until a run converges without
/// improvement or `restarts` extra runs are spent.
Minimum nelder_mead_restarts(const Objective& f, std::vector<double> start,
                             int restarts, SimplexOptions opts = {});

}  // namespace upb::optimize
