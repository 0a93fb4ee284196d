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

#include <optional>
#include <string>
#include <vector>

#include "upb/types.hpp"

namespace upb {

/// Equal-time second-order correlators and mean occupations. A correlator
/// whose normalising occupation vanishes is left empty rather than
/// reported as 0/0.
struct EqualTimeCorrelators {
  std::optional<double> g2_11;
  std::optional<double> g2_22;
  std::optional<double> g2_12;
  double n1 = 0.0;
  double n2 = 0.0;
};

enum class CorrelatorMethod { analytic, numeric };

std::string to_string(CorrelatorMethod m);

/// g2_{jk}(tau): photon detected at site `detected` at time 0, photon at
/// site `measured` a delay tau later.
struct SitePair {
  Site measured;
  Site detected;
};

struct CorrelatorSeries {
  std::vector<double> tau;
  std::vector<double> values;
  CorrelatorMethod method = CorrelatorMethod::analytic;
  SitePair sites{Site::two, Site::two};
  /// False when a normalising occupation vanishes; `values` is then empty.
  bool defined = true;
};

}  // namespace upb
