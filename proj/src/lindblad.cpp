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

#include "upb/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/UmfPackSupport>

#include "propagate.hpp"

namespace upb::lindblad {

using fock::DensityMatrix;
using fock::QuantumOperator;

namespace {

constexpr double kUndefinedDenominator = 1e-14;

SparseMatrix identity_matrix(int n) {
  SparseMatrix id(n, n);
  id.setIdentity();
  return id;
}

Eigen::Map<const ComplexVector> as_vector(const detail::State& x) {
  return {x.data(), static_cast<Eigen::Index>(x.size())};
}

// Occupations of basis index i.
int occupation(int cutoff, int index, Site s) {
  return s == Site::one ? index / (cutoff + 1) : index % (cutoff + 1);
}

// <n_site> of a (not necessarily normalised) vectorised density matrix.
double occupation_of_vec(int cutoff, const cplx* vec, Site s) {
  const int d = fock::dimension(cutoff);
  double acc = 0.0;
  for (int i = 0; i < d; ++i) acc += occupation(cutoff, i, s) * vec[i * (d + 1)].real();
  return acc;
}

DenseMatrix unvec(const ComplexVector& v, int d) {
  return Eigen::Map<const DenseMatrix>(v.data(), d, d);
}

detail::State to_state(const DenseMatrix& rho) {
  return {rho.data(), rho.data() + rho.size()};
}

}  // namespace

QuantumOperator build_hamiltonian(const DimerParams& p, const DriveSpec& d,
                                  int cutoff, double envelope) {
  if (cutoff < 2) throw CutoffError("master-equation cutoff must be >= 2");
  fock::check_cutoff(cutoff);
  p.validate();

  const QuantumOperator a1 = fock::destroy(cutoff, Site::one);
  const QuantumOperator a2 = fock::destroy(cutoff, Site::two);
  const QuantumOperator c1 = a1.adjoint();
  const QuantumOperator c2 = a2.adjoint();
  const QuantumOperator n1 = c1 * a1;
  const QuantumOperator n2 = c2 * a2;
  const cplx f1 = d.amplitude;
  const cplx f2 = d.site2_amplitude(envelope);

  QuantumOperator h = cplx(p.site_detuning(Site::one)) * n1 +
                      cplx(p.site_detuning(Site::two)) * n2;
  h = h + cplx(p.site_kerr(Site::one)) * (c1 * c1 * a1 * a1);
  h = h + cplx(p.site_kerr(Site::two)) * (c2 * c2 * a2 * a2);
  h = h + cplx(p.hopping) * (c1 * a2 + c2 * a1);
  h = h + f1 * (c1 + a1);
  h = h + f2 * c2 + std::conj(f2) * a2;
  if (p.cross_kerr != 0.0) h = h + cplx(p.cross_kerr) * (n1 * n2);
  return h;
}

Liouvillian::Liouvillian(int cutoff, SparseMatrix matrix)
    : cutoff_(cutoff), matrix_(std::move(matrix)) {
  const int d = fock::dimension(cutoff);
  if (matrix_.rows() != d * d || matrix_.cols() != d * d) {
    throw std::invalid_argument("Liouvillian shape does not match cutoff");
  }
  matrix_.makeCompressed();
}

DenseMatrix Liouvillian::apply(const DenseMatrix& rho) const {
  const int d = hilbert_dim();
  const ComplexVector v = Eigen::Map<const ComplexVector>(rho.data(), rho.size());
  return unvec(matrix_ * v, d);
}

SparseMatrix commutator_superoperator(const QuantumOperator& h) {
  const SparseMatrix id = identity_matrix(h.dim());
  const SparseMatrix ht = h.matrix().transpose();
  return cplx(0.0, -1.0) * (fock::kron(id, h.matrix()) - fock::kron(ht, id));
}

SparseMatrix dissipator_superoperator(const QuantumOperator& a, double gamma) {
  const SparseMatrix id = identity_matrix(a.dim());
  const SparseMatrix n = a.matrix().adjoint() * a.matrix();
  const SparseMatrix nt = n.transpose();
  const SparseMatrix jump = fock::kron(a.matrix().conjugate(), a.matrix());
  return gamma * (jump - 0.5 * (fock::kron(id, n) + fock::kron(nt, id)));
}

Liouvillian build_liouvillian(const QuantumOperator& h, double gamma1, double gamma2) {
  if (!(gamma1 > 0.0) || !(gamma2 > 0.0)) {
    throw std::invalid_argument("site decay rates must be positive");
  }
  const int cutoff = h.cutoff();
  SparseMatrix l = commutator_superoperator(h);
  l += dissipator_superoperator(fock::destroy(cutoff, Site::one), gamma1);
  l += dissipator_superoperator(fock::destroy(cutoff, Site::two), gamma2);
  return {cutoff, std::move(l)};
}

Liouvillian build_liouvillian(const DimerParams& p, const DriveSpec& d, int cutoff,
                              double envelope) {
  return build_liouvillian(build_hamiltonian(p, d, cutoff, envelope),
                           p.site_decay(Site::one), p.site_decay(Site::two));
}

DensityMatrix steady_state(const Liouvillian& l, SteadyStateOptions opts) {
  const int d = l.hilbert_dim();
  const int n = l.dim();
  if (opts.replaced_diagonal < 0 || opts.replaced_diagonal >= d) {
    throw std::invalid_argument("replaced_diagonal outside the Hilbert space");
  }
  const int row = opts.replaced_diagonal * (d + 1);

  std::vector<Eigen::Triplet<cplx>> entries;
  entries.reserve(static_cast<std::size_t>(l.matrix().nonZeros() + d));
  for (int k = 0; k < l.matrix().outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(l.matrix(), k); it; ++it) {
      if (it.row() != row) entries.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (int i = 0; i < d; ++i) entries.emplace_back(row, i * (d + 1), 1.0);
  // 64-bit indices and METIS keep the fill manageable at large cutoffs.
  using WideSparse = Eigen::SparseMatrix<cplx, Eigen::ColMajor, SuiteSparse_long>;
  WideSparse a(n, n);
  a.setFromTriplets(entries.begin(), entries.end());

  Eigen::UmfPackLU<WideSparse> lu;
  lu.umfpackControl()(UMFPACK_ORDERING) = UMFPACK_ORDERING_METIS;
  {
    // METIS draws from a process-wide RNG; concurrent orderings would make
    // results depend on thread scheduling.
    static std::mutex ordering_mutex;
    const std::lock_guard<std::mutex> lock(ordering_mutex);
    lu.analyzePattern(a);
  }
  if (lu.info() != Eigen::Success) {
    throw DegenerateSteadyStateError("symbolic analysis of the Liouvillian failed");
  }
  lu.factorize(a);
  if (lu.info() != Eigen::Success) {
    throw DegenerateSteadyStateError(
        "sparse LU of the trace-constrained Liouvillian failed (UMFPACK status " +
        std::to_string(lu.umfpackFactorizeReturncode()) + ")");
  }
  ComplexVector b = ComplexVector::Zero(n);
  b(row) = 1.0;
  ComplexVector x = lu.solve(b);
  const ComplexVector r = b - a * x;
  x += lu.solve(r);
  if (!x.allFinite()) {
    throw DegenerateSteadyStateError("steady-state solve produced non-finite entries");
  }

  DensityMatrix rho = DensityMatrix(l.cutoff(), unvec(x, d)).hermitized();
  const ComplexVector v = Eigen::Map<const ComplexVector>(rho.matrix().data(), n);
  const double residual = (l.matrix() * v).cwiseAbs().maxCoeff();
  if (!(residual <= opts.residual_tolerance)) {
    throw DegenerateSteadyStateError("steady-state residual " + std::to_string(residual) +
                                     " exceeds tolerance");
  }
  return rho;
}

EqualTimeCorrelators correlators_equal_time(const DensityMatrix& rho) {
  const int cutoff = rho.cutoff();
  double n1 = 0, n2 = 0, pairs11 = 0, pairs22 = 0, cross = 0;
  for (int i = 0; i < rho.dim(); ++i) {
    const double p = rho.matrix()(i, i).real();
    const double k1 = occupation(cutoff, i, Site::one);
    const double k2 = occupation(cutoff, i, Site::two);
    n1 += k1 * p;
    n2 += k2 * p;
    pairs11 += k1 * (k1 - 1) * p;
    pairs22 += k2 * (k2 - 1) * p;
    cross += k1 * k2 * p;
  }
  EqualTimeCorrelators out;
  out.n1 = n1;
  out.n2 = n2;
  if (n1 * n1 >= kUndefinedDenominator) out.g2_11 = pairs11 / (n1 * n1);
  if (n2 * n2 >= kUndefinedDenominator) out.g2_22 = pairs22 / (n2 * n2);
  if (n1 * n2 >= kUndefinedDenominator) out.g2_12 = cross / (n1 * n2);
  return out;
}

std::vector<double> default_tau_grid(double stop, std::size_t count) {
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = count > 1 ? stop * static_cast<double>(i) / static_cast<double>(count - 1) : 0.0;
  }
  return grid;
}

CorrelatorSeries g2_tau_numeric(const DimerParams& p, const DriveSpec& d,
                                SitePair sites, std::span<const double> tau,
                                int cutoff, IntegratorOptions opts) {
  if (d.pulse_width) throw std::invalid_argument("g2_tau_numeric requires a CW drive");
  const Liouvillian l = build_liouvillian(p, d, cutoff);
  const DensityMatrix rho = steady_state(l);
  const EqualTimeCorrelators eq = correlators_equal_time(rho);

  CorrelatorSeries out;
  out.tau.assign(tau.begin(), tau.end());
  out.method = CorrelatorMethod::numeric;
  out.sites = sites;

  auto mean = [&](Site s) { return s == Site::one ? eq.n1 : eq.n2; };
  const double denom = mean(sites.measured) * mean(sites.detected);
  if (denom < kUndefinedDenominator) {
    out.defined = false;
    return out;
  }

  const QuantumOperator a = fock::destroy(cutoff, sites.detected);
  DenseMatrix collapsed = a.matrix() * rho.matrix() * a.matrix().adjoint();
  const double weight = collapsed.trace().real();
  collapsed /= weight;

  const SparseMatrix& lm = l.matrix();
  auto rhs = [&lm](const detail::State& x, detail::State& dxdt, double) {
    dxdt.resize(x.size());
    Eigen::Map<ComplexVector>(dxdt.data(), static_cast<Eigen::Index>(dxdt.size())) =
        lm * as_vector(x);
  };
  detail::State state = to_state(collapsed);
  out.values.resize(tau.size());
  detail::propagate(rhs, state, tau, opts, [&](std::size_t i, const detail::State& x) {
    out.values[i] = occupation_of_vec(cutoff, x.data(), sites.measured) * weight / denom;
  });
  return out;
}

PulsedRun time_evolve_pulsed(const DimerParams& p, const DriveSpec& d,
                             std::span<const double> t, int cutoff,
                             IntegratorOptions opts) {
  if (!d.pulse_width) throw std::invalid_argument("time_evolve_pulsed needs a pulse width");
  d.validate();
  const double sigma = *d.pulse_width;
  if (t.size() < 2 || !std::is_sorted(t.begin(), t.end()) ||
      t.front() > -5.0 * sigma || t.back() < 5.0 * sigma) {
    throw std::invalid_argument("time grid must be ascending and span [-5 sigma, 5 sigma]");
  }

  // L(t) = L_static + envelope(t) * L_pulse
  DriveSpec cw_site1 = d;
  cw_site1.pulse_width.reset();
  const Liouvillian l_static = build_liouvillian(p, cw_site1, cutoff, 0.0);
  const cplx f2 = d.site2_amplitude();
  const QuantumOperator a2 = fock::destroy(cutoff, Site::two);
  const QuantumOperator pulse = f2 * a2.adjoint() + std::conj(f2) * a2;
  const SparseMatrix l_pulse = commutator_superoperator(pulse);

  auto rhs = [&](const detail::State& x, detail::State& dxdt, double time) {
    dxdt.resize(x.size());
    auto out = Eigen::Map<ComplexVector>(dxdt.data(), static_cast<Eigen::Index>(dxdt.size()));
    out = l_static.matrix() * as_vector(x);
    const double e = d.envelope(time);
    if (e > 0.0) out += e * (l_pulse * as_vector(x));
  };

  // Sample the requested grid plus the pulse peak.
  std::vector<double> times(t.begin(), t.end());
  if (!std::binary_search(times.begin(), times.end(), 0.0)) {
    times.insert(std::upper_bound(times.begin(), times.end(), 0.0), 0.0);
  }

  const DensityMatrix rho0 =
      steady_state(build_liouvillian(p, cw_site1, cutoff, d.envelope(times.front())));

  PulsedRun run;
  run.t.assign(t.begin(), t.end());
  run.n1.reserve(t.size());
  run.n2.reserve(t.size());
  const int hd = fock::dimension(cutoff);
  detail::State peak_state;
  detail::State state = to_state(rho0.matrix());
  detail::propagate(rhs, state, times, opts, [&](std::size_t i, const detail::State& x) {
    const double n1 = occupation_of_vec(cutoff, x.data(), Site::one);
    const double n2 = occupation_of_vec(cutoff, x.data(), Site::two);
    if (times[i] == 0.0 && peak_state.empty()) {
      peak_state = x;
      run.n1_at_peak = n1;
      run.n2_at_peak = n2;
    }
    if (std::binary_search(t.begin(), t.end(), times[i]) && run.n1.size() < t.size()) {
      run.n1.push_back(n1);
      run.n2.push_back(n2);
    }
  });

  const DenseMatrix rho_peak = Eigen::Map<const DenseMatrix>(peak_state.data(), hd, hd);
  const EqualTimeCorrelators eq =
      correlators_equal_time(DensityMatrix(cutoff, rho_peak).hermitized());
  run.g2_22_at_peak = eq.g2_22;

  // Two-time correlation from the peak: Tr[n2 rho_c(tau)] with
  // rho_c(0) = a2 rho(0) a2^dagger, evolved under the same L(t).
  std::vector<double> after{0.0};
  for (double x : t) {
    if (x > 0.0) after.push_back(x);
  }
  run.tau = after;
  run.g2_22_tau.assign(after.size(), std::nullopt);
  DenseMatrix collapsed = a2.matrix() * rho_peak * a2.matrix().adjoint();
  detail::State cstate = to_state(collapsed);
  detail::propagate(rhs, cstate, after, opts, [&](std::size_t i, const detail::State& x) {
    const double n2_tau = i == 0 ? run.n2_at_peak
                                 : run.n2[static_cast<std::size_t>(
                                       std::lower_bound(t.begin(), t.end(), after[i]) -
                                       t.begin())];
    const double denom = run.n2_at_peak * n2_tau;
    if (denom >= kUndefinedDenominator) {
      run.g2_22_tau[i] = occupation_of_vec(cutoff, x.data(), Site::two) / denom;
    }
  });
  return run;
}

}  // namespace upb::lindblad
