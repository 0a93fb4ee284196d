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
#include <string>
#include <utility>
#include <vector>

#include "upb/model.hpp"
#include "upb/parallel.hpp"
#include "upb/scan.hpp"

// Reproduction drivers: scans over the analytic and master-equation
// solvers, disorder tolerances, drive compensation, and unit conversion.

namespace upb::experiments {

inline const std::vector<double> kLocusTableHoppings{0.30, 0.40, 0.60, 0.70, 0.80, 1.00};
inline const std::vector<double> kOvershootTableHoppings{0.26, 0.30, 0.40, 0.55, 0.60,
                                                          0.70, 0.80, 0.90, 1.00};

/// Operating point used for the disorder and compensation studies.
struct OperatingPoint {
  DimerParams params;
  DriveSpec drive;
};

/// J = 0.4, U = 0.05164, Delta = 0.07746, phi = 90 deg, F1 = 0.05.
OperatingPoint disorder_nominal();

// Locus and drive phase ----------------------------------------------------

/// Quadrature locus per hopping: U_opt, U_opt_over_J, Delta_opt and the
/// dark-state boundary flag.
ScanResult locus_table(std::span<const double> hoppings, double decay = 1.0);

/// Axes J and phi_deg (phases given in radians); columns U_opt,
/// U_opt_over_J, Delta_opt, multiple_roots. Phases without a physical
/// solution are undefined.
ScanResult phase_locus_scan(std::span<const double> hoppings,
                            std::span<const double> phases, double decay = 1.0,
                            Execution exec = Execution::parallel);

struct PhaseMinimum {
  double phase = 0.0;  // radians
  double kerr = 0.0;
  double detuning = 0.0;
};

/// Drive phase minimising U_opt at fixed hopping: 0.5 deg grid over the
/// existence range, then Brent refinement.
std::optional<PhaseMinimum> minimum_kerr_over_phase(double hopping, double decay = 1.0);

// Master-equation landscape -------------------------------------------------

struct LandscapeOptions {
  int cutoff = 7;
  Execution exec = Execution::parallel;
  /// Maximum F1 in units of decay accepted for the cutoff.
  double max_amplitude = 0.3;
};

/// Axes F1 and Delta; columns g2_11, g2_22, g2_12, log10_n1, log10_n2.
/// Solver failures leave the point undefined.
ScanResult landscape_scan(std::span<const double> amplitudes,
                          std::span<const double> detunings, const DimerParams& p,
                          const DriveSpec& d, LandscapeOptions opts = {});

struct DetuningMinimum {
  double detuning = 0.0;
  double g2_22 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
};

/// Minimum over detuning of the master-equation g2_22(0): grid search,
/// then Brent refinement between the neighbours of the best grid point.
std::optional<DetuningMinimum> minimize_g2_over_detuning(
    const DimerParams& p, const DriveSpec& d, std::span<const double> detunings,
    LandscapeOptions opts = {});

// Overshoot -----------------------------------------------------------------

struct OvershootRow {
  double hopping = 0.0;
  double detuning = 0.0;
  double kerr = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double period2 = 0.0;  // 2 pi / |omega2|
  double g2_max = 0.0;
  double tau_max = 0.0;
};

/// Largest analytic g2_22(tau) on (0, 100 / decay] at the quadrature
/// locus. Throws DarkStateError at hopping = decay / 2.
OvershootRow overshoot_point(double hopping, double decay = 1.0);
ScanResult overshoot_scan(std::span<const double> hoppings, double decay = 1.0,
                          Execution exec = Execution::parallel);

// Disorder ------------------------------------------------------------------

enum class DisorderAxis { detuning, decay, kerr };

std::string to_string(DisorderAxis axis);
/// Accepts delta_Delta, delta_gamma, delta_U.
DisorderAxis parse_disorder_axis(const std::string& name);

struct ToleranceReport {
  DisorderAxis axis = DisorderAxis::detuning;
  double threshold = 0.1;
  /// Crossing points on either side of zero mismatch, when found.
  std::optional<double> positive_edge;
  std::optional<double> negative_edge;
  /// Smaller of the two edge magnitudes.
  std::optional<double> half_width;
};

/// Weak-drive g2_22(0) with one mismatch applied to the operating point.
std::optional<double> disorder_g2(const OperatingPoint& op, DisorderAxis axis,
                                  double mismatch);

/// Edges where g2_22(0) first exceeds `threshold`, searched out to
/// `reach` in steps of `step` and refined by bisection.
ToleranceReport disorder_tolerance(const OperatingPoint& op, DisorderAxis axis,
                                   double threshold = 0.1, double step = 1e-3,
                                   double reach = 1.0);

std::pair<ScanResult, ToleranceReport> disorder_scan(
    DisorderAxis axis, std::span<const double> mismatches, double threshold = 0.1,
    const OperatingPoint& op = disorder_nominal());

// Compensation --------------------------------------------------------------

enum class CompensationMode { phase_only, phase_and_ratio };

std::string to_string(CompensationMode mode);

struct Compensation {
  double detuning_mismatch = 0.0;
  double phase = 0.0;  // radians, in [0, 2 pi)
  double ratio = 1.0;
  double g2_min = 0.0;
  bool converged = false;
};

/// Re-tunes the drive phase (and ratio) to minimise the weak-drive
/// g2_22(0) of the operating point with a detuning mismatch.
Compensation compensate(double detuning_mismatch, CompensationMode mode,
                        const OperatingPoint& op = disorder_nominal());

/// Detuning-mismatch edges where the compensated g2_22(0) exceeds
/// `threshold`.
ToleranceReport compensation_tolerance(CompensationMode mode, double threshold = 0.1,
                                       const OperatingPoint& op = disorder_nominal(),
                                       double step = 1e-2, double reach = 0.6);

/// d phi_opt / d delta_Delta at zero mismatch, in degrees per 0.1 decay.
double compensation_phase_slope(CompensationMode mode,
                                const OperatingPoint& op = disorder_nominal(),
                                double h = 1e-2);

/// Axis delta_Delta; uncompensated g2 and both compensation modes.
ScanResult compensation_scan(std::span<const double> mismatches,
                             const OperatingPoint& op = disorder_nominal(),
                             Execution exec = Execution::parallel);

// Single-site drive comparison ---------------------------------------------

struct SingleSitePoint {
  double detuning = 0.0;
  double kerr = 0.0;
  /// Minimised |C20|^2 |E~ + U|^2 / (|C10|^4 decay^2).
  double residual = 0.0;
};

/// Kerr strength and detuning cancelling C20 with only site 1 driven,
/// found by Nelder-Mead over (log U, Delta) seeded from the bilateral
/// locus. Empty when no exact cancellation is reached.
std::optional<SingleSitePoint> single_site_point(double hopping, double decay = 1.0);

/// Axis J; columns U_bilateral, Delta_bilateral, U_single, Delta_single.
ScanResult single_site_comparison(std::span<const double> hoppings, double decay = 1.0,
                                  Execution exec = Execution::parallel);

struct Crossover {
  double hopping = 0.0;
  double kerr = 0.0;
};

/// Hopping where the single-site and bilateral Kerr strengths coincide,
/// bracketed on `hoppings` and refined by bisection.
std::optional<Crossover> single_site_crossover(std::span<const double> hoppings,
                                               double decay = 1.0);

// Units ---------------------------------------------------------------------

struct UnitConversion {
  double gamma_rad_per_s = 0.0;
  double gamma_GHz = 0.0;  // angular rate in 1e9 rad/s
  double lifetime_ps = 0.0;
};

UnitConversion unit_convert(double quality_factor, double wavelength_nm);

/// `count` evenly spaced values on [start, stop].
std::vector<double> linspace(double start, double stop, std::size_t count);

}  // namespace upb::experiments
