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

#include "upb/model.hpp"

#include <cmath>
#include <stdexcept>

namespace upb {

void DimerParams::validate() const {
  if (!(decay > 0.0)) throw std::invalid_argument("decay rate must be positive");
  if (!(site_decay(Site::one) > 0.0) || !(site_decay(Site::two) > 0.0)) {
    throw std::invalid_argument("decay mismatch leaves a site with non-positive loss");
  }
  if (hopping < 0.0) throw std::invalid_argument("hopping must be non-negative");
}

double DriveSpec::envelope(double t) const {
  if (!pulse_width) return 1.0;
  const double s = *pulse_width;
  return std::exp(-t * t / (2.0 * s * s));
}

void DriveSpec::validate() const {
  if (amplitude < 0.0) throw std::invalid_argument("drive amplitude must be non-negative");
  if (ratio < 0.0) throw std::invalid_argument("drive ratio must be non-negative");
  if (pulse_width && !(*pulse_width > 0.0)) {
    throw std::invalid_argument("pulse width must be positive");
  }
}

}  // namespace upb
