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

#include "upb/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "upb/analytic.hpp"
#include "upb/lindblad.hpp"
#include "upb/optimize.hpp"

namespace upb::experiments {

namespace {

constexpr double kPenalty = 1e6;

double value_or_penalty(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? *v : kPenalty;
}

std::optional<double> flag(bool b) { return b ? 1.0 : 0.0; }

// Root of a bracketed sign change, to machine precision in x.
template <class F>
double bisect_root(F&& f, double a, double b) {
  auto tol = [](double lo, double hi) { return std::abs(hi - lo) <= 1e-12; };
  const auto r = boost::math::tools::bisect(f, std::min(a, b), std::max(a, b), tol);
  return 0.5 * (r.first + r.second);
}

// First point along sign * x where score(x) rises above threshold.
template <class Score>
std::optional<double> find_edge(Score&& score, double threshold, double sign, double step,
                                double reach) {
  auto excess = [&](double x) { return value_or_penalty(score(x)) - threshold; };
  double prev = 0.0;
  if (excess(prev) > 0.0) return 0.0;
  const auto steps = static_cast<int>(std::floor(reach / step + 1e-9));
  for (int k = 1; k <= steps; ++k) {
    const double x = sign * k * step;
    if (excess(x) > 0.0) return bisect_root(excess, prev, x);
    prev = x;
  }
  return std::nullopt;
}

std::optional<double> min_magnitude(const std::optional<double>& a,
                                    const std::optional<double>& b) {
  if (a && b) return std::min(std::abs(*a), std::abs(*b));
  return std::nullopt;
}

std::optional<EqualTimeCorrelators> master_equation_point(const DimerParams& p,
                                                          const DriveSpec& d, int cutoff) {
  try {
    const auto rho = lindblad::steady_state(lindblad::build_liouvillian(p, d, cutoff));
    return lindblad::correlators_equal_time(rho);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<double> log10_positive(double x) {
  if (x > 0.0) return std::log10(x);
  return std::nullopt;
}

}  // namespace

OperatingPoint disorder_nominal() {
  OperatingPoint op;
  op.params.hopping = 0.4;
  op.params.kerr = 0.05164;
  op.params.detuning = 0.07746;
  op.params.decay = 1.0;
  op.drive.amplitude = 0.05;
  op.drive.phase = kPi / 2;
  op.drive.ratio = 1.0;
  return op;
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = count > 1 ? start + (stop - start) * static_cast<double>(i) /
                                     static_cast<double>(count - 1)
                       : start;
  }
  return out;
}

ScanResult locus_table(std::span<const double> hoppings, double decay) {
  ScanResult scan;
  scan.axes.push_back({"J", {hoppings.begin(), hoppings.end()}});
  auto& u = scan.add_column("U_opt", true);
  auto& uj = scan.add_column("U_opt_over_J", true);
  auto& delta = scan.add_column("Delta_opt", true);
  auto& boundary = scan.add_column("dark_state_boundary");
  for (std::size_t i = 0; i < hoppings.size(); ++i) {
    try {
      const auto loc = analytic::locus_quadrature(hoppings[i], decay);
      u.values[i] = loc.kerr;
      uj.values[i] = loc.kerr / hoppings[i];
      delta.values[i] = loc.detuning;
      boundary.values[i] = flag(loc.dark_state_boundary);
    } catch (const ThresholdError&) {
    }
  }
  scan.add_metadata("gamma", decay);
  scan.add_metadata("phi_deg", 90.0);
  return scan;
}

ScanResult phase_locus_scan(std::span<const double> hoppings, std::span<const double> phases,
                            double decay, Execution exec) {
  for (double phi : phases) {
    if (!(phi > 0.0 && phi < kPi)) throw std::invalid_argument("drive phase must lie in (0, pi)");
  }
  ScanResult scan;
  scan.axes.push_back({"J", {hoppings.begin(), hoppings.end()}});
  std::vector<double> degrees;
  for (double phi : phases) degrees.push_back(rad_to_deg(phi));
  scan.axes.push_back({"phi_deg", degrees});

  const std::size_t np = phases.size();
  const auto points = map_points<std::optional<analytic::PhasePoint>>(
      scan.size(),
      [&](std::size_t i) -> std::optional<analytic::PhasePoint> {
        try {
          return analytic::solve_phase_point(phases[i % np], hoppings[i / np], decay);
        } catch (const std::exception&) {
          return std::nullopt;
        }
      },
      exec);

  auto& u = scan.add_column("U_opt", true);
  auto& uj = scan.add_column("U_opt_over_J", true);
  auto& delta = scan.add_column("Delta_opt", true);
  auto& multiple = scan.add_column("multiple_roots");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i]) continue;
    u.values[i] = points[i]->kerr;
    uj.values[i] = points[i]->kerr / hoppings[i / np];
    delta.values[i] = points[i]->detuning;
    multiple.values[i] = flag(points[i]->multiple_physical_roots);
  }
  scan.add_metadata("gamma", decay);
  scan.add_metadata("execution", to_string(exec));
  return scan;
}

std::optional<PhaseMinimum> minimum_kerr_over_phase(double hopping, double decay) {
  if (!(hopping > analytic::kMinHopping * decay)) return std::nullopt;
  const analytic::PhaseInterval range = analytic::phase_range(hopping, decay);
  auto kerr_at = [&](double phi) {
    const auto pt = analytic::solve_phase_point(phi, hopping, decay);
    return pt ? pt->kerr : std::numeric_limits<double>::infinity();
  };
  const double step = deg_to_rad(0.5);
  double best = range.lo + step;
  for (double phi = best; phi < range.hi; phi += step) {
    if (kerr_at(phi) < kerr_at(best)) best = phi;
  }
  if (!std::isfinite(kerr_at(best))) return std::nullopt;
  const double lo = std::max(range.lo, best - step);
  const double hi = std::min(range.hi, best + step);
  std::uintmax_t iterations = 100;
  const double phi = boost::math::tools::brent_find_minima(
      kerr_at, lo, hi, std::numeric_limits<double>::digits / 2, iterations).first;
  const auto pt = analytic::solve_phase_point(phi, hopping, decay);
  if (!pt) return std::nullopt;
  return PhaseMinimum{phi, pt->kerr, pt->detuning};
}

ScanResult landscape_scan(std::span<const double> amplitudes, std::span<const double> detunings,
                          const DimerParams& p, const DriveSpec& d, LandscapeOptions opts) {
  if (amplitudes.empty() || detunings.empty()) {
    throw std::invalid_argument("landscape grids must be non-empty");
  }
  for (double f : amplitudes) {
    if (f > opts.max_amplitude * p.decay) {
      throw std::invalid_argument("F1 above " + std::to_string(opts.max_amplitude) +
                                  " gamma is unsafe for the Fock cutoff");
    }
  }
  if (d.pulse_width) throw std::invalid_argument("landscape requires a CW drive");

  ScanResult scan;
  scan.axes.push_back({"F1", {amplitudes.begin(), amplitudes.end()}});
  scan.axes.push_back({"Delta", {detunings.begin(), detunings.end()}});
  const std::size_t nd = detunings.size();
  const auto points = map_points<std::optional<EqualTimeCorrelators>>(
      scan.size(),
      [&](std::size_t i) {
        DimerParams pi = p;
        DriveSpec di = d;
        di.amplitude = amplitudes[i / nd];
        pi.detuning = detunings[i % nd];
        return master_equation_point(pi, di, opts.cutoff);
      },
      opts.exec);

  auto& g11 = scan.add_column("g2_11", true);
  auto& g22 = scan.add_column("g2_22", true);
  auto& g12 = scan.add_column("g2_12", true);
  auto& ln1 = scan.add_column("log10_n1", true);
  auto& ln2 = scan.add_column("log10_n2", true);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i]) continue;
    g11.values[i] = points[i]->g2_11;
    g22.values[i] = points[i]->g2_22;
    g12.values[i] = points[i]->g2_12;
    ln1.values[i] = log10_positive(points[i]->n1);
    ln2.values[i] = log10_positive(points[i]->n2);
  }
  scan.add_metadata("J", p.hopping);
  scan.add_metadata("U", p.kerr);
  scan.add_metadata("gamma", p.decay);
  scan.add_metadata("phi_deg", rad_to_deg(d.phase));
  scan.add_metadata("ratio", d.ratio);
  scan.add_metadata("Ncut", std::to_string(opts.cutoff));
  scan.add_metadata("method", "master equation steady state");
  scan.add_metadata("execution", to_string(opts.exec));
  return scan;
}

std::optional<DetuningMinimum> minimize_g2_over_detuning(const DimerParams& p,
                                                         const DriveSpec& d,
                                                         std::span<const double> detunings,
                                                         LandscapeOptions opts) {
  if (detunings.empty()) return std::nullopt;
  const std::array<double, 1> amplitude{d.amplitude};
  const ScanResult grid = landscape_scan(amplitude, detunings, p, d, opts);
  const auto& g22 = grid.column("g2_22").values;
  std::size_t best = g22.size();
  for (std::size_t i = 0; i < g22.size(); ++i) {
    if (g22[i] && (best == g22.size() || *g22[i] < *g22[best])) best = i;
  }
  if (best == g22.size()) return std::nullopt;

  auto at = [&](double delta) {
    DimerParams q = p;
    q.detuning = delta;
    return master_equation_point(q, d, opts.cutoff);
  };
  const double lo = detunings[best == 0 ? 0 : best - 1];
  const double hi = detunings[std::min(best + 1, detunings.size() - 1)];
  double x = detunings[best];
  if (hi > lo) {
    auto objective = [&](double delta) { return value_or_penalty(at(delta)->g2_22); };
    std::uintmax_t iterations = 60;
    x = boost::math::tools::brent_find_minima(objective, lo, hi, 30, iterations).first;
  }
  const auto c = at(x);
  if (!c || !c->g2_22) return std::nullopt;
  return DetuningMinimum{x, *c->g2_22, c->n1, c->n2};
}

OvershootRow overshoot_point(double hopping, double decay) {
  const auto loc = analytic::locus_quadrature(hopping, decay);
  if (loc.dark_state_boundary) {
    throw DarkStateError("J = gamma / 2 is the linear dark state, not blockade");
  }
  DimerParams p;
  p.hopping = hopping;
  p.decay = decay;
  p.detuning = loc.detuning;
  p.kerr = loc.kerr;
  DriveSpec d;
  d.amplitude = 0.05 * decay;

  const auto modes = analytic::qrt_modes(p, d, Site::two);
  constexpr std::size_t kGrid = 4000;
  const double tau_stop = 100.0 / decay;
  std::vector<double> tau(kGrid);
  for (std::size_t i = 0; i < kGrid; ++i) tau[i] = tau_stop * static_cast<double>(i + 1) / kGrid;
  const SitePair sites{Site::two, Site::two};
  const auto series = analytic::qrt_g2_tau(p, d, sites, tau);
  if (!series.defined) throw DarkStateError("site-2 correlator undefined at this hopping");

  const auto k = static_cast<std::size_t>(
      std::max_element(series.values.begin(), series.values.end()) - series.values.begin());
  auto g2 = [&](double t) {
    const std::array<double, 1> one{t};
    return analytic::qrt_g2_tau(p, d, sites, one).values.front();
  };
  const double lo = k == 0 ? tau.front() : tau[k - 1];
  const double hi = k + 1 < kGrid ? tau[k + 1] : tau.back();
  std::uintmax_t iterations = 200;
  const auto peak = boost::math::tools::brent_find_minima(
      [&](double t) { return -g2(t); }, lo, hi, std::numeric_limits<double>::digits / 2,
      iterations);

  OvershootRow row;
  row.hopping = hopping;
  row.detuning = loc.detuning;
  row.kerr = loc.kerr;
  row.omega1 = modes.omega1;
  row.omega2 = modes.omega2;
  row.period2 = 2.0 * kPi / std::abs(modes.omega2);
  row.g2_max = std::max(-peak.second, series.values[k]);
  row.tau_max = -peak.second >= series.values[k] ? peak.first : tau[k];
  return row;
}

ScanResult overshoot_scan(std::span<const double> hoppings, double decay, Execution exec) {
  for (double j : hoppings) {
    if (!(j > decay / 4)) throw ThresholdError("overshoot table requires J > gamma / 4");
    if (std::abs(j - decay / 2) <= 1e-12 * decay) {
      throw DarkStateError("J = gamma / 2 is the linear dark state, not blockade");
    }
  }
  const auto rows = map_points<OvershootRow>(
      hoppings.size(), [&](std::size_t i) { return overshoot_point(hoppings[i], decay); }, exec);
  ScanResult scan;
  scan.axes.push_back({"J", {hoppings.begin(), hoppings.end()}});
  auto& delta = scan.add_column("Delta_opt", true);
  auto& u = scan.add_column("U_opt", true);
  auto& w1 = scan.add_column("omega1", true);
  auto& w2 = scan.add_column("omega2", true);
  auto& t2 = scan.add_column("T2", true);
  auto& gmax = scan.add_column("g2_max", true);
  auto& tmax = scan.add_column("tau_max");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    delta.values[i] = rows[i].detuning;
    u.values[i] = rows[i].kerr;
    w1.values[i] = rows[i].omega1;
    w2.values[i] = rows[i].omega2;
    t2.values[i] = rows[i].period2;
    gmax.values[i] = rows[i].g2_max;
    tmax.values[i] = rows[i].tau_max;
  }
  scan.add_metadata("gamma", decay);
  scan.add_metadata("method", "analytic regression theorem, grid then Brent on (0, 100/gamma]");
  return scan;
}

std::string to_string(DisorderAxis axis) {
  switch (axis) {
    case DisorderAxis::detuning: return "delta_Delta";
    case DisorderAxis::decay: return "delta_gamma";
    case DisorderAxis::kerr: return "delta_U";
  }
  return "unknown";
}

DisorderAxis parse_disorder_axis(const std::string& name) {
  if (name == "delta_Delta") return DisorderAxis::detuning;
  if (name == "delta_gamma") return DisorderAxis::decay;
  if (name == "delta_U") return DisorderAxis::kerr;
  throw std::invalid_argument("unknown disorder axis " + name +
                              " (expected delta_Delta, delta_gamma or delta_U)");
}

std::optional<double> disorder_g2(const OperatingPoint& op, DisorderAxis axis, double mismatch) {
  DimerParams p = op.params;
  switch (axis) {
    case DisorderAxis::detuning: p.detuning_mismatch = mismatch; break;
    case DisorderAxis::decay: p.decay_mismatch = mismatch; break;
    case DisorderAxis::kerr: p.kerr_mismatch = mismatch; break;
  }
  try {
    p.validate();
    return analytic::g2_from_amplitudes(analytic::amplitude_steady_state(p, op.drive)).g2_22;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

ToleranceReport disorder_tolerance(const OperatingPoint& op, DisorderAxis axis,
                                   double threshold, double step, double reach) {
  auto score = [&](double x) { return disorder_g2(op, axis, x); };
  ToleranceReport report;
  report.axis = axis;
  report.threshold = threshold;
  report.positive_edge = find_edge(score, threshold, +1.0, step, reach);
  report.negative_edge = find_edge(score, threshold, -1.0, step, reach);
  report.half_width = min_magnitude(report.positive_edge, report.negative_edge);
  return report;
}

std::pair<ScanResult, ToleranceReport> disorder_scan(DisorderAxis axis,
                                                     std::span<const double> mismatches,
                                                     double threshold,
                                                     const OperatingPoint& op) {
  ScanResult scan;
  scan.axes.push_back({to_string(axis), {mismatches.begin(), mismatches.end()}});
  auto& g22 = scan.add_column("g2_22", true);
  for (std::size_t i = 0; i < mismatches.size(); ++i) {
    g22.values[i] = disorder_g2(op, axis, mismatches[i]);
  }
  const ToleranceReport report = disorder_tolerance(op, axis, threshold);
  scan.add_metadata("method", "weak-drive amplitude equations");
  scan.add_metadata("split", "site values x +- delta/2");
  scan.add_metadata("threshold", threshold);
  scan.add_metadata("positive_edge", format_value(report.positive_edge));
  scan.add_metadata("negative_edge", format_value(report.negative_edge));
  scan.add_metadata("half_width", format_value(report.half_width));
  return {std::move(scan), report};
}

std::string to_string(CompensationMode mode) {
  return mode == CompensationMode::phase_only ? "phase_only" : "phase_and_ratio";
}

Compensation compensate(double detuning_mismatch, CompensationMode mode,
                        const OperatingPoint& op) {
  OperatingPoint base = op;
  base.params.detuning_mismatch = detuning_mismatch;
  auto g2_at = [&](double phase, double ratio) {
    DriveSpec d = base.drive;
    d.phase = ratio < 0.0 ? phase + kPi : phase;
    d.ratio = std::abs(ratio);
    try {
      return value_or_penalty(
          analytic::g2_from_amplitudes(analytic::amplitude_steady_state(base.params, d)).g2_22);
    } catch (const std::exception&) {
      return kPenalty;
    }
  };
  const bool with_ratio = mode == CompensationMode::phase_and_ratio;
  const optimize::Objective objective = [&](const std::vector<double>& x) {
    return g2_at(x[0], with_ratio ? x[1] : base.drive.ratio);
  };

  // Coarse phase seed at the nominal ratio, then simplex refinement.
  double seed = kPi / 2;
  double seed_value = g2_at(seed, base.drive.ratio);
  for (int deg = 0; deg < 360; ++deg) {
    const double phi = deg_to_rad(deg);
    const double v = g2_at(phi, base.drive.ratio);
    if (v < seed_value) {
      seed = phi;
      seed_value = v;
    }
  }
  std::vector<std::vector<double>> starts;
  for (double phi : {seed, kPi / 2}) {
    starts.push_back(with_ratio ? std::vector<double>{phi, base.drive.ratio}
                                : std::vector<double>{phi});
  }
  optimize::Minimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& start : starts) {
    optimize::Minimum m = optimize::nelder_mead_restarts(objective, start, 3);
    if (m.value < best.value) best = std::move(m);
  }

  Compensation out;
  out.detuning_mismatch = detuning_mismatch;
  double phase = best.x[0];
  double ratio = with_ratio ? best.x[1] : base.drive.ratio;
  if (ratio < 0.0) {
    ratio = -ratio;
    phase += kPi;
  }
  out.phase = std::fmod(std::fmod(phase, 2 * kPi) + 2 * kPi, 2 * kPi);
  out.ratio = ratio;
  out.g2_min = best.value;
  out.converged = best.converged;
  return out;
}

ToleranceReport compensation_tolerance(CompensationMode mode, double threshold,
                                       const OperatingPoint& op, double step, double reach) {
  auto score = [&](double x) -> std::optional<double> { return compensate(x, mode, op).g2_min; };
  ToleranceReport report;
  report.axis = DisorderAxis::detuning;
  report.threshold = threshold;
  report.positive_edge = find_edge(score, threshold, +1.0, step, reach);
  report.negative_edge = find_edge(score, threshold, -1.0, step, reach);
  report.half_width = min_magnitude(report.positive_edge, report.negative_edge);
  return report;
}

double compensation_phase_slope(CompensationMode mode, const OperatingPoint& op, double h) {
  const double up = compensate(+h, mode, op).phase;
  const double down = compensate(-h, mode, op).phase;
  double diff = up - down;
  diff = std::remainder(diff, 2 * kPi);
  return rad_to_deg(diff / (2 * h)) * 0.1 * op.params.decay;
}

ScanResult compensation_scan(std::span<const double> mismatches, const OperatingPoint& op,
                             Execution exec) {
  struct Row {
    std::optional<double> plain;
    Compensation phase_only, phase_ratio;
  };
  const auto rows = map_points<Row>(
      mismatches.size(),
      [&](std::size_t i) {
        return Row{disorder_g2(op, DisorderAxis::detuning, mismatches[i]),
                   compensate(mismatches[i], CompensationMode::phase_only, op),
                   compensate(mismatches[i], CompensationMode::phase_and_ratio, op)};
      },
      exec);
  ScanResult scan;
  scan.axes.push_back({"delta_Delta", {mismatches.begin(), mismatches.end()}});
  auto& plain = scan.add_column("g2_uncompensated", true);
  auto& po_phi = scan.add_column("phase_only_phi_deg", true);
  auto& po_g2 = scan.add_column("phase_only_g2");
  auto& po_ok = scan.add_column("phase_only_converged");
  auto& pr_phi = scan.add_column("phase_ratio_phi_deg", true);
  auto& pr_r = scan.add_column("phase_ratio_ratio", true);
  auto& pr_g2 = scan.add_column("phase_ratio_g2");
  auto& pr_ok = scan.add_column("phase_ratio_converged");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    plain.values[i] = rows[i].plain;
    po_phi.values[i] = rad_to_deg(rows[i].phase_only.phase);
    po_g2.values[i] = rows[i].phase_only.g2_min;
    po_ok.values[i] = flag(rows[i].phase_only.converged);
    pr_phi.values[i] = rad_to_deg(rows[i].phase_ratio.phase);
    pr_r.values[i] = rows[i].phase_ratio.ratio;
    pr_g2.values[i] = rows[i].phase_ratio.g2_min;
    pr_ok.values[i] = flag(rows[i].phase_ratio.converged);
  }
  scan.add_metadata("method", "Nelder-Mead on weak-drive g2_22(0)");
  scan.add_metadata("execution", to_string(exec));
  return scan;
}

std::optional<SingleSitePoint> single_site_point(double hopping, double decay) {
  DimerParams p;
  p.hopping = hopping;
  p.decay = decay;
  DriveSpec d;
  d.amplitude = 1e-3 * decay;
  d.ratio = 0.0;

  auto residual = [&](double log_kerr, double detuning) {
    DimerParams q = p;
    q.kerr = std::exp(log_kerr) * decay;
    q.detuning = detuning * decay;
    try {
      const auto c = analytic::amplitude_steady_state(q, d);
      const double c10 = std::norm(c.c10);
      if (!(c10 > 0.0)) return kPenalty;
      const double shift = std::norm(analytic::complex_detuning(q) + q.kerr) / (decay * decay);
      return 2.0 * std::norm(c.c20) / (c10 * c10) * shift;
    } catch (const std::exception&) {
      return kPenalty;
    }
  };
  const optimize::Objective objective = [&](const std::vector<double>& x) {
    return residual(x[0], x[1]);
  };

  double u_seed = decay;
  double delta_seed = 0.0;
  if (hopping > analytic::kMinHopping * decay) {
    const auto loc = analytic::locus_quadrature(hopping, decay);
    u_seed = std::max(loc.kerr, 0.05 * decay);
    delta_seed = loc.detuning;
  }
  const double lu = std::log(u_seed / decay);
  const double ds = delta_seed / decay;
  optimize::Minimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& start : {std::vector<double>{lu, ds}, std::vector<double>{lu, -ds},
                            std::vector<double>{lu, 0.0}}) {
    optimize::Minimum m = optimize::nelder_mead_restarts(objective, start, 3);
    if (m.value < best.value) best = std::move(m);
  }
  constexpr double kExact = 1e-12;
  constexpr double kMaxLogKerr = 9.0;
  if (!(best.value < kExact) || best.x[0] > kMaxLogKerr) return std::nullopt;
  return SingleSitePoint{best.x[1] * decay, std::exp(best.x[0]) * decay, best.value};
}

ScanResult single_site_comparison(std::span<const double> hoppings, double decay,
                                  Execution exec) {
  const auto singles = map_points<std::optional<SingleSitePoint>>(
      hoppings.size(), [&](std::size_t i) { return single_site_point(hoppings[i], decay); },
      exec);
  ScanResult scan;
  scan.axes.push_back({"J", {hoppings.begin(), hoppings.end()}});
  auto& ub = scan.add_column("U_bilateral", true);
  auto& db = scan.add_column("Delta_bilateral", true);
  auto& us = scan.add_column("U_single", true);
  auto& ds = scan.add_column("Delta_single", true);
  for (std::size_t i = 0; i < hoppings.size(); ++i) {
    if (hoppings[i] > analytic::kMinHopping * decay) {
      const auto loc = analytic::locus_quadrature(hoppings[i], decay);
      ub.values[i] = loc.kerr;
      db.values[i] = loc.detuning;
    }
    if (singles[i]) {
      us.values[i] = singles[i]->kerr;
      ds.values[i] = singles[i]->detuning;
    }
  }
  scan.add_metadata("gamma", decay);
  scan.add_metadata("single_site_condition", "C20 = 0 with only site 1 driven");
  if (const auto cross = single_site_crossover(hoppings, decay)) {
    scan.add_metadata("crossover_J", cross->hopping);
    scan.add_metadata("crossover_U", cross->kerr);
  } else {
    scan.add_metadata("crossover_J", kUndefinedMarker);
  }
  return scan;
}

std::optional<Crossover> single_site_crossover(std::span<const double> hoppings, double decay) {
  auto difference = [&](double j) -> std::optional<double> {
    if (!(j > analytic::kMinHopping * decay)) return std::nullopt;
    const auto single = single_site_point(j, decay);
    if (!single) return std::nullopt;
    return single->kerr - analytic::locus_quadrature(j, decay).kerr;
  };
  std::optional<double> prev_value;
  double prev_j = 0.0;
  for (double j : hoppings) {
    const auto v = difference(j);
    if (v && prev_value && (*v == 0.0 || std::signbit(*v) != std::signbit(*prev_value))) {
      auto f = [&](double x) { return value_or_penalty(difference(x)); };
      const double root = *v == 0.0 ? j : bisect_root(f, prev_j, j);
      return Crossover{root, analytic::locus_quadrature(root, decay).kerr};
    }
    if (v) {
      prev_value = v;
      prev_j = j;
    }
  }
  return std::nullopt;
}

UnitConversion unit_convert(double quality_factor, double wavelength_nm) {
  if (!(quality_factor > 0.0) || !(wavelength_nm > 0.0)) {
    throw std::invalid_argument("quality factor and wavelength must be positive");
  }
  constexpr double kSpeedOfLight = 299792458.0;
  const double omega = 2.0 * kPi * kSpeedOfLight / (wavelength_nm * 1e-9);
  UnitConversion out;
  out.gamma_rad_per_s = omega / quality_factor;
  out.gamma_GHz = out.gamma_rad_per_s / 1e9;
  out.lifetime_ps = 1e12 / out.gamma_rad_per_s;
  return out;
}

}  // namespace upb::experiments
