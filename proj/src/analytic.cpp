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

#include "upb/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>

namespace upb {

std::string to_string(CorrelatorMethod m) {
  return m == CorrelatorMethod::analytic ? "analytic" : "numeric";
}

}  // namespace upb

namespace upb::analytic {

namespace {

constexpr cplx kI{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);

// One-photon amplitudes below this fraction of the larger one are treated
// as exactly zero when normalising correlators.
constexpr double kUndefinedRatio = 1e-10;

void require_symmetric_cw(const DimerParams& p, const DriveSpec& d,
                          const char* who) {
  if (!p.symmetric()) {
    throw std::invalid_argument(std::string(who) + " requires a symmetric dimer");
  }
  if (d.pulse_width) {
    throw std::invalid_argument(std::string(who) + " requires a CW drive");
  }
}

bool negligible(double value, double scale) {
  return scale == 0.0 || value <= kUndefinedRatio * scale;
}

}  // namespace

cplx complex_detuning(const DimerParams& p) {
  return {p.detuning, -p.decay / 2};
}

cplx complex_detuning(const DimerParams& p, Site site) {
  return {p.site_detuning(site), -p.site_decay(site) / 2};
}

LocusPoint locus_quadrature(double hopping, double decay) {
  if (!(decay > 0.0)) throw std::invalid_argument("decay must be positive");
  if (hopping <= kMinHopping * decay) {
    throw ThresholdError("quadrature locus requires hopping > decay / 4 (got J = " +
                         std::to_string(hopping / decay) + " gamma)");
  }
  const double root = std::sqrt(4.0 * hopping / decay - 1.0);
  const double offset = hopping - decay / 2;
  LocusPoint pt;
  pt.detuning = -offset * root;
  pt.kerr = 4.0 * offset * offset / (decay * root);
  pt.dark_state_boundary = std::abs(offset) <= 1e-12 * decay;
  return pt;
}

cplx kerr_for_phase(double phase, double detuning, double hopping, double decay) {
  const cplx p = std::polar(1.0, phase);
  const cplx e{detuning, -decay / 2};
  const double j = hopping;
  const cplx denom = j * j * (1.0 + p * p) - 4.0 * p * j * e + 2.0 * p * p * e * e;
  const double scale = std::max(j * j, std::norm(e));
  if (std::abs(denom) <= 1e-14 * scale) {
    throw SingularPointError("kerr_for_phase: vanishing denominator");
  }
  const cplx num = j - p * e;
  return -2.0 * e * num * num / denom;
}

std::optional<PhasePoint> solve_phase_point(double phase, double hopping,
                                            double decay) {
  constexpr int kSteps = 600;
  const double lo = -3.0 * decay;
  const double step = 0.01 * decay;

  auto imag_kerr = [&](double x) -> std::optional<double> {
    try {
      return kerr_for_phase(phase, x, hopping, decay).imag();
    } catch (const SingularPointError&) {
      return std::nullopt;
    }
  };

  std::vector<PhasePoint> roots;
  auto accept = [&](double x) {
    cplx u;
    try {
      u = kerr_for_phase(phase, x, hopping, decay);
    } catch (const SingularPointError&) {
      return;
    }
    // Sign changes across a pole are not roots.
    if (std::abs(u.imag()) > 1e-8 * std::max(1.0, std::abs(u))) return;
    if (u.real() <= 0.0) return;
    roots.push_back({x, u.real(), false});
  };

  std::optional<double> prev = imag_kerr(lo);
  for (int k = 1; k <= kSteps; ++k) {
    const double a = lo + (k - 1) * step;
    const double b = lo + k * step;
    const std::optional<double> cur = imag_kerr(b);
    if (prev && cur) {
      if (*prev == 0.0) {
        accept(a);
      } else if (*cur != 0.0 && std::signbit(*prev) != std::signbit(*cur)) {
        auto f = [&](double x) { return imag_kerr(x).value_or(0.0); };
        auto tol = [](double x0, double x1) { return std::abs(x1 - x0) < 1e-12; };
        const auto bracket = boost::math::tools::bisect(f, a, b, tol);
        accept((bracket.first + bracket.second) / 2);
      }
    }
    prev = cur;
  }
  if (prev && *prev == 0.0) accept(lo + kSteps * step);

  if (roots.empty()) return std::nullopt;
  auto best = std::min_element(roots.begin(), roots.end(), [](const auto& l, const auto& r) {
    return std::abs(l.detuning) < std::abs(r.detuning);
  });
  PhasePoint out = *best;
  out.multiple_physical_roots = roots.size() > 1;
  return out;
}

PhaseInterval phase_range(double hopping, double decay, double resolution) {
  if (hopping <= kMinHopping * decay) {
    throw ThresholdError("phase_range requires hopping > decay / 4");
  }
  auto exists = [&](double phi) {
    return solve_phase_point(phi, hopping, decay).has_value();
  };

  const double coarse = deg_to_rad(0.5);
  double seed = kPi / 2;
  // At hopping = decay / 2 the 90 deg solution has U = 0; look nearby.
  for (int k = 1; !exists(seed) && k < 90; ++k) {
    seed = kPi / 2 + ((k % 2) ? 1 : -1) * ((k + 1) / 2) * coarse;
  }
  if (!exists(seed)) throw Error("phase_range: no physical phase found");

  // Walk outward on the coarse grid, then bisect the existence edge.
  auto edge = [&](double direction) {
    double inside = seed;
    double outside = seed + direction * coarse;
    while (outside > 0.0 && outside < kPi && exists(outside)) {
      inside = outside;
      outside += direction * coarse;
    }
    outside = std::clamp(outside, 0.0, kPi);
    while (std::abs(outside - inside) > resolution) {
      const double mid = (inside + outside) / 2;
      (exists(mid) ? inside : outside) = mid;
    }
    return (inside + outside) / 2;
  };
  return {edge(-1.0), edge(+1.0)};
}

std::optional<DarkState> dark_state_phase(double hopping, double decay) {
  if (!(hopping > decay / 2)) return std::nullopt;
  const double phase = std::asin(decay / (2.0 * hopping));
  return DarkState{phase, hopping * std::cos(phase)};
}

FockAmplitudes amplitude_steady_state(const DimerParams& p, const DriveSpec& d) {
  const cplx e1 = complex_detuning(p, Site::one);
  const cplx e2 = complex_detuning(p, Site::two);
  const double j = p.hopping;
  const cplx f1 = d.amplitude;
  const cplx f2 = d.site2_amplitude();

  const cplx det1 = e1 * e2 - j * j;
  if (std::abs(det1) <= 1e-14 * (std::abs(e1 * e2) + j * j)) {
    throw ResonanceError("singular one-photon system");
  }
  FockAmplitudes c;
  c.c10 = (j * f2 - e2 * f1) / det1;
  c.c01 = (j * f1 - e1 * f2) / det1;

  const cplx u1 = p.site_kerr(Site::one);
  const cplx u2 = p.site_kerr(Site::two);
  const cplx hop = kSqrt2 * j;
  Eigen::Matrix3cd m;
  m << 2.0 * (e1 + u1), hop, 0.0,
       hop, e1 + e2 + p.cross_kerr, hop,
       0.0, hop, 2.0 * (e2 + u2);
  const Eigen::Vector3cd rhs(-kSqrt2 * f1 * c.c10,
                             -(f2 * c.c10 + f1 * c.c01),
                             -kSqrt2 * f2 * c.c01);
  Eigen::FullPivLU<Eigen::Matrix3cd> lu(m);
  const double scale = m.rowwise().norm().prod();
  if (std::abs(lu.determinant()) <= 1e-14 * scale) {
    throw ResonanceError("singular two-photon system");
  }
  const Eigen::Vector3cd two = lu.solve(rhs);
  c.c20 = two(0);
  c.c11 = two(1);
  c.c02 = two(2);
  return c;
}

EqualTimeCorrelators g2_from_amplitudes(const FockAmplitudes& c) {
  EqualTimeCorrelators out;
  out.n1 = std::norm(c.c10);
  out.n2 = std::norm(c.c01);
  const double scale = std::max(std::abs(c.c10), std::abs(c.c01));
  const bool has1 = !negligible(std::abs(c.c10), scale);
  const bool has2 = !negligible(std::abs(c.c01), scale);
  if (has1) out.g2_11 = 2.0 * std::norm(c.c20) / (out.n1 * out.n1);
  if (has2) out.g2_22 = 2.0 * std::norm(c.c02) / (out.n2 * out.n2);
  if (has1 && has2) out.g2_12 = std::norm(c.c11) / (out.n1 * out.n2);
  return out;
}

QrtModes qrt_modes(const DimerParams& p, const DriveSpec& d, Site detected) {
  require_symmetric_cw(p, d, "qrt_modes");
  const cplx e = complex_detuning(p);
  const double j = p.hopping;
  const cplx f1 = d.amplitude;
  const cplx f2 = d.site2_amplitude();
  const FockAmplitudes c = amplitude_steady_state(p, d);
  const cplx vacuum = detected == Site::one ? c.c10 : c.c01;

  QrtModes m;
  m.rate1 = kI * (e + j);
  m.rate2 = kI * (e - j);
  m.omega1 = p.detuning + j;
  m.omega2 = p.detuning - j;
  m.source1 = -kI * (f1 + f2) * vacuum;
  m.source2 = -kI * (f1 - f2) * vacuum;
  return m;
}

CorrelatorSeries qrt_g2_tau(const DimerParams& p, const DriveSpec& d,
                            SitePair sites, std::span<const double> tau) {
  require_symmetric_cw(p, d, "qrt_g2_tau");
  const FockAmplitudes c = amplitude_steady_state(p, d);
  const QrtModes m = qrt_modes(p, d, sites.detected);

  CorrelatorSeries out;
  out.tau.assign(tau.begin(), tau.end());
  out.method = CorrelatorMethod::analytic;
  out.sites = sites;

  const double scale = std::max(std::abs(c.c10), std::abs(c.c01));
  auto one_photon = [&](Site s) { return s == Site::one ? c.c10 : c.c01; };
  const double norm_measured = std::abs(one_photon(sites.measured));
  const double norm_detected = std::abs(one_photon(sites.detected));
  if (negligible(norm_measured, scale) || negligible(norm_detected, scale)) {
    out.defined = false;
    return out;
  }

  // One-photon amplitudes of the post-detection state a_k |psi>.
  cplx d10, d01;
  if (sites.detected == Site::two) {
    d10 = c.c11;
    d01 = kSqrt2 * c.c02;
  } else {
    d10 = kSqrt2 * c.c20;
    d01 = c.c11;
  }
  const cplx x0 = d10 + d01;
  const cplx y0 = d10 - d01;
  const cplx x_inf = m.source1 / m.rate1;
  const cplx y_inf = m.source2 / m.rate2;
  const double denom = norm_measured * norm_measured * norm_detected * norm_detected;

  out.values.reserve(tau.size());
  for (double t : tau) {
    const cplx x = (x0 - x_inf) * std::exp(-m.rate1 * t) + x_inf;
    const cplx y = (y0 - y_inf) * std::exp(-m.rate2 * t) + y_inf;
    const cplx amp = sites.measured == Site::one ? (x + y) / 2.0 : (x - y) / 2.0;
    out.values.push_back(std::norm(amp) / denom);
  }
  return out;
}

CorrelatorSeries qrt_g2_tau(const DimerParams& p, const DriveSpec& d, Site site,
                            std::span<const double> tau) {
  return qrt_g2_tau(p, d, SitePair{site, site}, tau);
}

cplx upb_residual(const DimerParams& p, const DriveSpec& d) {
  const bool closed_form = p.symmetric() && p.cross_kerr == 0.0 && d.ratio == 1.0;
  const double g = p.decay;
  if (closed_form) {
    const cplx e = complex_detuning(p);
    const double j = p.hopping;
    const double u = p.kerr;
    const cplx phase = std::polar(1.0, d.phase);
    if (std::abs(phase - kI) < 1e-12) {
      return ((e + u) * (e + 2.0 * kI * j) - j * j) / (g * g);
    }
    const cplx lhs = j * j * (2.0 * e + u * (1.0 + phase * phase));
    const cplx rhs = 2.0 * phase * e * (e + u) * (2.0 * j - phase * e);
    return (lhs - rhs) / (g * g * g);
  }
  DriveSpec unit = d;
  unit.amplitude = 1.0;
  unit.pulse_width.reset();
  return amplitude_steady_state(p, unit).c02 * g * g;
}

}  // namespace upb::analytic
