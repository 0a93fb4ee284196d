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

#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "helpers.hpp"
#include "upb/analytic.hpp"
#include "upb/lindblad.hpp"

using namespace upb;
using namespace upb::analytic;
using testing::cw;
using testing::locus_point_04;

namespace {

// Weak-drive amplitudes from the non-Hermitian Hamiltonian restricted to
// at most two photons, with C00 = 1 and a drive small enough that the
// two-photon back-action on the one-photon sector is negligible.
FockAmplitudes brute_force_amplitudes(const DimerParams& p, DriveSpec d) {
  const double scale = 1e-6 / d.amplitude;
  d.amplitude *= scale;
  const int n = 2;
  const auto h = lindblad::build_hamiltonian(p, d, n);
  const auto n1 = fock::number(n, Site::one), n2 = fock::number(n, Site::two);
  const DenseMatrix heff =
      DenseMatrix(h.matrix()) - cplx(0, 0.5) * (p.site_decay(Site::one) * DenseMatrix(n1.matrix()) +
                                                  p.site_decay(Site::two) * DenseMatrix(n2.matrix()));
  const std::array<std::array<int, 2>, 5> states{{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}};
  Eigen::Matrix<cplx, 5, 5> m;
  Eigen::Matrix<cplx, 5, 1> rhs;
  const int vac = fock::state_index(n, 0, 0);
  for (int r = 0; r < 5; ++r) {
    const int i = fock::state_index(n, states[r][0], states[r][1]);
    rhs(r) = -heff(i, vac);
    for (int c = 0; c < 5; ++c) m(r, c) = heff(i, fock::state_index(n, states[c][0], states[c][1]));
  }
  const Eigen::Matrix<cplx, 5, 1> c = m.fullPivLu().solve(rhs);
  // Undo the drive rescaling: one-photon ~ F, two-photon ~ F^2.
  return {c(0) / scale, c(1) / scale, c(2) / (scale * scale), c(3) / (scale * scale),
          c(4) / (scale * scale)};
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_SUITE("analytic") {

TEST_CASE("complex detuning") {
  DimerParams p;
  p.detuning = 0.0;
  CHECK(complex_detuning(p) == cplx(0.0, -0.5));
  p.detuning = 0.077;
  CHECK(complex_detuning(p) == cplx(0.077, -0.5));
  CHECK(complex_detuning(p, Site::one) == complex_detuning(p, Site::two));
  p.decay_mismatch = 0.2;
  p.detuning_mismatch = 0.1;
  CHECK(std::abs(complex_detuning(p, Site::one) - cplx(0.127, -0.55)) < 1e-15);
  CHECK(std::abs(complex_detuning(p, Site::two) - cplx(0.027, -0.45)) < 1e-15);
}

TEST_CASE("quadrature locus reference rows") {
  struct Row { double j, u, delta; };
  for (const Row& r : {Row{0.3, 0.358, 0.089}, Row{0.4, 0.052, 0.077}, Row{0.6, 0.034, -0.118},
                       Row{0.7, 0.119, -0.268}, Row{0.8, 0.243, -0.445}, Row{1.0, 0.577, -0.866}}) {
    const auto loc = locus_quadrature(r.j, 1.0);
    CHECK(std::abs(loc.kerr - r.u) < 1e-3);
    CHECK(std::abs(loc.detuning - r.delta) < 1e-3);
    CHECK_FALSE(loc.dark_state_boundary);
  }
  const auto boundary = locus_quadrature(0.5, 1.0);
  CHECK(boundary.dark_state_boundary);
  CHECK(std::abs(boundary.kerr) < 1e-15);
  CHECK(std::abs(boundary.detuning) < 1e-15);
  CHECK_THROWS_AS(locus_quadrature(0.25, 1.0), ThresholdError);
  CHECK_THROWS_AS(locus_quadrature(0.2, 1.0), ThresholdError);
  CHECK_NOTHROW(locus_quadrature(0.26, 1.0));
}

TEST_CASE("locus properties over the valid hopping range") {
  for (int k = 1; k <= 200; ++k) {
    const double j = 0.25 + 1.75 * k / 200.0;
    const auto loc = locus_quadrature(j, 1.0);
    DimerParams p;
    p.hopping = j;
    p.kerr = loc.kerr;
    p.detuning = loc.detuning;
    CHECK(std::abs(upb_residual(p, cw(1.0))) < 1e-12);
    // Kerr-detuning relation along the locus.
    CHECK(std::abs(loc.kerr - 2 * loc.detuning * (1 - 2 * j) / (4 * j - 1)) < 1e-12);
  }
}

TEST_CASE("locus scales with the decay rate") {
  for (double s : {0.5, 2.0, 7.3}) {
    const auto a = locus_quadrature(0.4, 1.0);
    const auto b = locus_quadrature(0.4 * s, s);
    CHECK(std::abs(b.kerr - s * a.kerr) < 1e-12 * s);
    CHECK(std::abs(b.detuning - s * a.detuning) < 1e-12 * s);
  }
}

TEST_CASE("Kerr strength for a drive phase") {
  const cplx e(0.2, -0.5);
  CHECK(std::abs(kerr_for_phase(0.0, 0.2, 0.4, 1.0) + e) < 1e-14);
  CHECK(std::abs(kerr_for_phase(kPi, 0.2, 0.4, 1.0) + e) < 1e-12);
  CHECK(std::abs(kerr_for_phase(0.0, 0.2, 0.4, 1.0).imag() - 0.5) < 1e-14);
  const auto loc = locus_quadrature(0.4, 1.0);
  const cplx u = kerr_for_phase(kPi / 2, loc.detuning, 0.4, 1.0);
  CHECK(std::abs(u.imag()) < 1e-12);
  CHECK(std::abs(u.real() - 0.052) < 1e-3);
}

TEST_CASE("general phase matches the quadratic at 90 deg for random draws") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dl(-2, 2), hj(0.05, 2), g(0.2, 2);
  for (int i = 0; i < 1000; ++i) {
    const double delta = dl(rng), j = hj(rng), gamma = g(rng);
    const cplx e(delta, -gamma / 2);
    const cplx quadratic = j * j / (e + cplx(0, 2 * j)) - e;
    const cplx general = kerr_for_phase(kPi / 2, delta, j, gamma);
    CHECK(std::abs(general - quadratic) < 1e-10 * std::max(1.0, std::abs(quadratic)));
  }
}

TEST_CASE("phase points") {
  struct Row { double phi, u, delta; };
  for (const Row& r : {Row{40, 1.835, 0.453}, Row{60, 0.192, 0.317}, Row{90, 0.052, 0.077},
                       Row{120, 0.113, -0.112}, Row{150, 0.663, -0.351}}) {
    const auto pt = solve_phase_point(deg_to_rad(r.phi), 0.4, 1.0);
    REQUIRE(pt.has_value());
    CHECK(std::abs(pt->kerr - r.u) < 1e-3);
    CHECK(std::abs(pt->detuning - r.delta) < 1e-3);
    DimerParams p;
    p.hopping = 0.4;
    p.kerr = pt->kerr;
    p.detuning = pt->detuning;
    CHECK(std::abs(upb_residual(p, cw(1.0, r.phi))) < 1e-9);
  }
  CHECK_FALSE(solve_phase_point(0.0, 0.4, 1.0).has_value());
  CHECK_FALSE(solve_phase_point(0.0, 0.8, 1.0).has_value());
  CHECK_FALSE(solve_phase_point(kPi, 0.4, 1.0).has_value());
  CHECK(solve_phase_point(deg_to_rad(150), 0.4, 1.0)->multiple_physical_roots);
}

TEST_CASE("phase range") {
  const auto r03 = phase_range(0.3, 1.0);
  CHECK(r03.lo < kPi / 2);
  CHECK(r03.hi > kPi / 2);
  // Every interior grid phase has a solution, points just outside do not.
  for (double phi = r03.lo + 0.01; phi < r03.hi - 0.01; phi += 0.05) {
    CHECK(solve_phase_point(phi, 0.3, 1.0).has_value());
  }
  CHECK_FALSE(solve_phase_point(r03.lo - 0.01, 0.3, 1.0).has_value());
  CHECK_FALSE(solve_phase_point(r03.hi + 0.01, 0.3, 1.0).has_value());
  CHECK(phase_range(0.45, 1.0).width() > r03.width());
  CHECK_THROWS_AS(phase_range(0.25, 1.0), ThresholdError);
  const auto r04 = phase_range(0.4, 1.0);
  CHECK(std::abs(rad_to_deg(r04.hi) - 151.0) < 1.0);
}

TEST_CASE("dark state") {
  CHECK(rad_to_deg(dark_state_phase(1.0, 1.0)->phase) == doctest::Approx(30.0));
  CHECK_FALSE(dark_state_phase(0.4, 1.0).has_value());
  CHECK_FALSE(dark_state_phase(0.5, 1.0).has_value());
  CHECK(rad_to_deg(dark_state_phase(0.5 + 1e-12, 1.0)->phase) == doctest::Approx(90.0).epsilon(1e-4));
  for (double j : {0.6, 1.0, 1.7}) {
    const auto dark = dark_state_phase(j, 1.0);
    DimerParams p;
    p.hopping = j;
    p.detuning = dark->detuning;
    p.kerr = 0.0;
    const double f = 0.01;
    const auto c = amplitude_steady_state(p, cw(f, rad_to_deg(dark->phase)));
    CHECK(std::abs(c.c01) < 1e-12 * f);
    const auto g = g2_from_amplitudes(c);
    CHECK_FALSE(g.g2_22.has_value());
    CHECK_FALSE(g.g2_12.has_value());
    CHECK(g.g2_11.has_value());
  }
}

TEST_CASE("amplitudes agree with a brute-force effective Hamiltonian") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 200; ++i) {
    DimerParams p;
    p.hopping = 0.1 + std::abs(u(rng));
    p.detuning = u(rng);
    p.kerr = 0.5 * std::abs(u(rng));
    p.decay = 1.0 + 0.5 * u(rng);
    p.cross_kerr = i % 2 ? 0.2 * u(rng) : 0.0;
    p.detuning_mismatch = i % 3 ? 0.1 * u(rng) : 0.0;
    p.decay_mismatch = i % 5 ? 0.1 * u(rng) : 0.0;
    p.kerr_mismatch = i % 7 ? 0.05 * u(rng) : 0.0;
    const DriveSpec d = cw(0.05, 180 * std::abs(u(rng)), 1.5 * std::abs(u(rng)));
    const auto a = amplitude_steady_state(p, d);
    const auto b = brute_force_amplitudes(p, d);
    CHECK(rel(a.c10, b.c10) < 1e-8);
    CHECK(rel(a.c01, b.c01) < 1e-8);
    CHECK(rel(a.c20, b.c20) < 1e-6);
    CHECK(rel(a.c11, b.c11) < 1e-6);
    CHECK(rel(a.c02, b.c02) < 1e-6);
  }
}

TEST_CASE("amplitude solver examples") {
  const auto c = amplitude_steady_state(locus_point_04(), cw(0.01));
  CHECK(std::abs(c.c02) / std::norm(c.c01) < 1e-9);

  DimerParams p;
  p.hopping = 0.7;
  p.detuning = -0.3;
  p.kerr = 0.2;
  const auto in_phase = amplitude_steady_state(p, cw(0.02, 0.0));
  CHECK(std::abs(in_phase.c10 - in_phase.c01) < 1e-15);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 100; ++i) {
    DimerParams q;
    q.hopping = 0.05 + 1.5 * std::abs(u(rng));
    q.detuning = 2 * u(rng);
    q.kerr = std::abs(u(rng));
    const auto a = amplitude_steady_state(q, cw(0.01));
    CHECK(std::abs(a.c01 / a.c10) < 1.0);
    // One-photon ratio for the quadrature drive.
    const cplx e = complex_detuning(q);
    const cplx ratio = (cplx(0, 1) * e - q.hopping) / (e - cplx(0, q.hopping));
    CHECK(std::abs(a.c01 / a.c10 - ratio) < 1e-12 * std::abs(ratio) + 1e-15);
  }

  // Site-1 drive only: direct solve of the one-photon pair.
  const auto single = amplitude_steady_state(p, cw(0.01, 90, 0.0));
  const cplx e = complex_detuning(p);
  const cplx det = e * e - p.hopping * p.hopping;
  CHECK(std::abs(single.c10 - (-0.01 * e / det)) < 1e-15);
  CHECK(std::abs(single.c01 - (0.01 * p.hopping / det)) < 1e-15);
}

TEST_CASE("cross-Kerr enters the |1,1> diagonal only") {
  DimerParams p = locus_point_04();
  const auto base = amplitude_steady_state(p, cw(0.01));
  p.cross_kerr = 0.03;
  const auto shifted = amplitude_steady_state(p, cw(0.01));
  CHECK(shifted.c10 == base.c10);
  CHECK(shifted.c01 == base.c01);
  CHECK(std::abs(shifted.c11 - base.c11) > 1e-8);
  const auto oracle = brute_force_amplitudes(p, cw(0.01));
  CHECK(rel(shifted.c02, oracle.c02) < 1e-6);
}

TEST_CASE("correlators from amplitudes") {
  const auto g = g2_from_amplitudes(amplitude_steady_state(locus_point_04(), cw(0.01)));
  REQUIRE(g.g2_22.has_value());
  CHECK(*g.g2_22 < 1e-6);
  CHECK(std::abs(*g.g2_11 - 0.98) < 0.01);

  FockAmplitudes c{cplx(0.01, 0), cplx(0, 0.004), cplx(1e-4, 0), cplx(0, 2e-5), cplx(0, 0)};
  const auto z = g2_from_amplitudes(c);
  CHECK(*z.g2_22 == 0.0);
  CHECK(std::abs(*z.g2_11 - 2e-8 / 1e-8) < 1e-12);
  CHECK(std::abs(*z.g2_12 - 4e-10 / (1e-4 * 1.6e-5)) < 1e-9);
  CHECK(std::abs(z.n1 - 1e-4) < 1e-18);

  c.c01 = 0.0;
  const auto dark = g2_from_amplitudes(c);
  CHECK_FALSE(dark.g2_22.has_value());
  CHECK_FALSE(dark.g2_12.has_value());
}

TEST_CASE("regression-theorem modes") {
  for (double j : {0.3, 0.4, 0.6, 1.0}) {
    const auto loc = locus_quadrature(j, 1.0);
    DimerParams p;
    p.hopping = j;
    p.detuning = loc.detuning;
    p.kerr = loc.kerr;
    for (Site s : {Site::one, Site::two}) {
      const auto m = qrt_modes(p, cw(0.01), s);
      CHECK(m.rate1.real() == 0.5);
      CHECK(m.rate2.real() == 0.5);
      CHECK(std::abs(m.omega1 - m.omega2 - 2 * j) < 1e-15);
      CHECK(std::abs(m.omega1 - (loc.detuning + j)) < 1e-15);
    }
  }
}

TEST_CASE("closed-form delayed correlators") {
  const DimerParams p = locus_point_04();
  const DriveSpec d = cw(0.01);
  const std::vector<double> tau{0.0, 200.0};
  const auto s2 = qrt_g2_tau(p, d, Site::two, tau);
  CHECK(std::abs(s2.values[0]) < 1e-9);
  CHECK(std::abs(s2.values[1] - 1.0) < 1e-9);

  const auto grid = lindblad::default_tau_grid(10.0, 2001);
  const auto series = qrt_g2_tau(p, d, Site::two, grid);
  double crossing = -1;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (series.values[i - 1] < 0.5 && series.values[i] >= 0.5) {
      crossing = grid[i];
      break;
    }
  }
  CHECK(std::abs(crossing - 3.2) < 0.2);

  const auto s1 = qrt_g2_tau(p, d, Site::one, tau);
  const auto eq = g2_from_amplitudes(amplitude_steady_state(p, d));
  CHECK(std::abs(s1.values[0] - *eq.g2_11) < 1e-12);
  CHECK(std::abs(s1.values[0] - 0.98) < 0.01);

  DimerParams asym = p;
  asym.detuning_mismatch = 0.01;
  CHECK_THROWS(qrt_g2_tau(asym, d, Site::two, tau));
}

TEST_CASE("closed-form correlators match the master equation") {
  const auto tau = lindblad::default_tau_grid(15.0, 121);
  for (double j : {0.3, 0.6, 0.8}) {
    const auto loc = locus_quadrature(j, 1.0);
    DimerParams p;
    p.hopping = j;
    p.detuning = loc.detuning;
    p.kerr = loc.kerr;
    const DriveSpec d = cw(0.005);
    for (SitePair s : {SitePair{Site::two, Site::two}, SitePair{Site::one, Site::one},
                       SitePair{Site::one, Site::two}, SitePair{Site::two, Site::one}}) {
      const auto a = qrt_g2_tau(p, d, s, tau);
      const auto n = lindblad::g2_tau_numeric(p, d, s, tau, 5);
      double worst = 0;
      for (std::size_t i = 0; i < tau.size(); ++i) worst = std::max(worst, std::abs(a.values[i] - n.values[i]));
      INFO("J = " << j << ", sites " << site_number(s.measured) << site_number(s.detected));
      CHECK(worst < 0.01);
    }
  }
}

TEST_CASE("interference residual") {
  DimerParams p = locus_point_04();
  CHECK(std::abs(upb_residual(p, cw(1.0))) < 1e-12);
  p.kerr *= 1.1;
  CHECK(std::abs(upb_residual(p, cw(1.0))) > 1e-4);
}

TEST_CASE("threshold factor between single-site and bilateral schemes") {
  CHECK(std::abs((1 / std::sqrt(2.0)) / kMinHopping - 2 * std::sqrt(2.0)) < 1e-15);
  CHECK_NOTHROW(locus_quadrature(0.26, 1.0));
}

}  // TEST_SUITE
