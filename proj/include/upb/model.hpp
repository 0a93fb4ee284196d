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

#include "upb/types.hpp"

namespace upb {

/// Physical parameters of the two-site Kerr dimer, in units where the
/// mean decay rate `decay` sets the scale.
///
/// Site mismatches are split symmetrically around the nominal value:
/// site 1 gets `x + dx/2`, site 2 gets `x - dx/2`.
struct DimerParams {
  double detuning = 0.0;   // cavity-laser detuning
  double kerr = 0.0;       // on-site Kerr strength, U a^dag^2 a^2 convention
  double hopping = 0.0;    // inter-site tunnelling
  double decay = 1.0;      // photon loss rate
  double cross_kerr = 0.0; // U_x n1 n2

  double detuning_mismatch = 0.0;
  double decay_mismatch = 0.0;
  double kerr_mismatch = 0.0;

  double site_detuning(Site s) const {
    return s == Site::one ? detuning + detuning_mismatch / 2
                          : detuning - detuning_mismatch / 2;
  }
  double site_decay(Site s) const {
    return s == Site::one ? decay + decay_mismatch / 2
                          : decay - decay_mismatch / 2;
  }
  double site_kerr(Site s) const {
    return s == Site::one ? kerr + kerr_mismatch / 2 : kerr - kerr_mismatch / 2;
  }

  bool symmetric() const {
    return detuning_mismatch == 0.0 && decay_mismatch == 0.0 &&
           kerr_mismatch == 0.0;
  }

  /// Throws std::invalid_argument when a decay rate is not positive or the
  /// hopping is negative.
  void validate() const;
};

/// Bilateral coherent drive. Site 1 receives `amplitude` (real); site 2
/// receives `ratio * amplitude * exp(i phase)`, optionally shaped by a
/// Gaussian envelope of width `pulse_width` centred on t = 0.
struct DriveSpec {
  double amplitude = 0.0;
  double phase = kPi / 2;  // radians
  double ratio = 1.0;
  std::optional<double> pulse_width;

  cplx site2_amplitude(double envelope = 1.0) const {
    return ratio * amplitude * std::polar(1.0, phase) * envelope;
  }

  /// exp(-t^2 / 2 sigma^2), or 1 for a CW drive.
  double envelope(double t) const;

  void validate() const;
};

}  // namespace upb
