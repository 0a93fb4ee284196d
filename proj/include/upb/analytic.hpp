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
#include <span>

#include "upb/correlators.hpp"
#include "upb/model.hpp"

// Closed-form weak-drive results for the bilaterally driven Kerr dimer:
// the two-photon amplitude solver, the C02 = 0 interference condition for
// quadrature and general drive phase, and regression-theorem correlators.

namespace upb::analytic {

/// Lowest hopping (in units of decay) admitting the quadrature locus.
inline constexpr double kMinHopping = 0.25;

/// Delta - i gamma / 2 for the symmetric dimer.
cplx complex_detuning(const DimerParams& p);
/// Per-site Delta_j - i gamma_j / 2.
cplx complex_detuning(const DimerParams& p, Site site);

struct LocusPoint {
  double detuning = 0.0;
  double kerr = 0.0;
  /// Set at hopping = decay / 2, where the locus degenerates to the
  /// linear dark state (U = 0) rather than genuine blockade.
  bool dark_state_boundary = false;
};

/// Closed-form optimum for the phi = 90 deg, equal-amplitude drive.
/// Throws ThresholdError when hopping <= decay / 4.
LocusPoint locus_quadrature(double hopping, double decay);

/// Complex Kerr strength that cancels C02 at drive phase `phase`.
/// Physical only when the imaginary part vanishes and the real part is
/// positive. Throws SingularPointError on a vanishing denominator.
cplx kerr_for_phase(double phase, double detuning, double hopping, double decay);

struct PhasePoint {
  double detuning = 0.0;
  double kerr = 0.0;
  /// More than one physical root was found in the detuning bracket; the
  /// reported one has the smallest |detuning|.
  bool multiple_physical_roots = false;
};

/// Detuning and Kerr strength with real positive `kerr_for_phase`. Roots are
/// bracketed on a 0.01 decay grid over [-3, 3] decay and refined by
/// bisection.
std::optional<PhasePoint> solve_phase_point(double phase, double hopping,
                                            double decay);

struct PhaseInterval {
  double lo = 0.0;  // radians
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// Interval of drive phases with a physical solution, containing 90 deg,
/// resolved to `resolution` radians.
PhaseInterval phase_range(double hopping, double decay,
                          double resolution = deg_to_rad(0.1));

struct DarkState {
  double phase = 0.0;     // arcsin(decay / 2 hopping)
  double detuning = 0.0;  // hopping * cos(phase), where C01 vanishes
};

std::optional<DarkState> dark_state_phase(double hopping, double decay);

/// Weak-drive amplitudes; C00 = 1.
struct FockAmplitudes {
  cplx c10, c01, c20, c11, c02;
};

/// Steady state of the no-jump amplitude equations truncated at two
/// photons. Handles per-site mismatches, arbitrary drive ratio and phase,
/// and adds the cross-Kerr shift to the |1,1> diagonal only.
FockAmplitudes amplitude_steady_state(const DimerParams& p, const DriveSpec& d);

/// Weak-drive correlators: g2_jj = 2|C_jj|^2 / |C_j|^4,
/// g2_12 = |C11|^2 / (|C10|^2 |C01|^2).
EqualTimeCorrelators g2_from_amplitudes(const FockAmplitudes& c);

/// Decoupled one-photon modes x = C10 + C01 (index 1) and y = C10 - C01
/// (index 2) after a detection at `detected`.
struct QrtModes {
  cplx rate1, rate2;     // i (E~ +- J), real part gamma / 2
  double omega1 = 0.0;   // Delta + J
  double omega2 = 0.0;   // Delta - J
  cplx source1, source2; // -i (F1 +- F2) c0
};

QrtModes qrt_modes(const DimerParams& p, const DriveSpec& d, Site detected);

/// Closed-form g2_{jk}(tau) from the regression theorem in the weak-drive
/// limit. Requires a symmetric dimer and CW drive.
CorrelatorSeries qrt_g2_tau(const DimerParams& p, const DriveSpec& d,
                            SitePair sites, std::span<const double> tau);
CorrelatorSeries qrt_g2_tau(const DimerParams& p, const DriveSpec& d, Site site,
                            std::span<const double> tau);

/// Dimensionless residual of the C02 = 0 condition. Uses the quadratic
/// (E~ + U)(E~ + 2iJ) = J^2 at phi = 90 deg and the general-phase relation
/// otherwise (equal amplitudes, symmetric dimer). For other drives it
/// falls back to the normalised two-photon amplitude C02 gamma^2 / F1^2.
cplx upb_residual(const DimerParams& p, const DriveSpec& d);

}  // namespace upb::analytic
