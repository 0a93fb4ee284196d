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

#include <complex>
#include <random>

#include "upb/fock.hpp"
#include "upb/model.hpp"

namespace upb::testing {

inline DimerParams locus_point_04() {
  DimerParams p;
  p.hopping = 0.4;
  p.kerr = 0.051639777949432;
  p.detuning = 0.077459666924148;
  return p;
}

inline DriveSpec cw(double amplitude, double phase_deg = 90.0, double ratio = 1.0) {
  DriveSpec d;
  d.amplitude = amplitude;
  d.phase = deg_to_rad(phase_deg);
  d.ratio = ratio;
  return d;
}

/// Random Hermitian, positive, unit-trace matrix.
inline fock::DensityMatrix random_density(int cutoff, std::mt19937_64& rng) {
  const int d = fock::dimension(cutoff);
  std::normal_distribution<double> n;
  DenseMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = cplx(n(rng), n(rng));
  DenseMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return {cutoff, rho};
}

}  // namespace upb::testing
