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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "upb/correlators.hpp"
#include "upb/fock.hpp"
#include "upb/model.hpp"

namespace upb::lindblad {

inline constexpr int kDefaultCutoff = 7;
inline constexpr int kConvergenceCutoff = 15;

/// H = sum_j Delta_j n_j + sum_j U_j a_j^dag^2 a_j^2 + J (a1^dag a2 + h.c.)
///     + F1 (a1^dag + a1) + (F2 a2^dag + F2^* a2) + U_x n1 n2,
/// with F2 = ratio F1 exp(i phase) * envelope.
fock::QuantumOperator build_hamiltonian(const DimerParams& p, const DriveSpec& d,
                                        int cutoff, double envelope = 1.0);

/// Superoperator acting on column-major vec(rho).
class Liouvillian {
 public:
  Liouvillian(int cutoff, SparseMatrix matrix);

  int cutoff() const { return cutoff_; }
  int hilbert_dim() const { return fock::dimension(cutoff_); }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const SparseMatrix& matrix() const { return matrix_; }

  /// L(rho) reshaped back to a matrix.
  DenseMatrix apply(const DenseMatrix& rho) const;

 private:
  int cutoff_;
  SparseMatrix matrix_;
};

/// -i (I (x) H - H^T (x) I)
SparseMatrix commutator_superoperator(const fock::QuantumOperator& h);

/// gamma [ a^* (x) a - (I (x) n + n^T (x) I) / 2 ]
SparseMatrix dissipator_superoperator(const fock::QuantumOperator& a, double gamma);

Liouvillian build_liouvillian(const fock::QuantumOperator& h, double gamma1,
                              double gamma2);

/// Liouvillian of the full model, including per-site losses.
Liouvillian build_liouvillian(const DimerParams& p, const DriveSpec& d, int cutoff,
                              double envelope = 1.0);

struct SteadyStateOptions {
  /// Diagonal element rho_kk whose equation is replaced by Tr(rho) = 1.
  int replaced_diagonal = 0;
  /// Largest accepted max |L rho| after Hermitization.
  double residual_tolerance = 1e-10;
};

/// Trace-constrained direct sparse solve of L rho = 0, followed by one step
/// of iterative refinement, Hermitization and renormalisation. Throws
/// DegenerateSteadyStateError if the constrained system is singular or the
/// residual exceeds the tolerance.
fock::DensityMatrix steady_state(const Liouvillian& l, SteadyStateOptions opts = {});

/// Mean occupations and normal-ordered g2; correlators whose denominator
/// falls below 1e-14 are left undefined.
EqualTimeCorrelators correlators_equal_time(const fock::DensityMatrix& rho);

/// Adaptive Dormand-Prince 5(4) settings for every propagation.
struct IntegratorOptions {
  double rtol = 1e-8;
  double atol = 1e-12;
  double initial_step = 1e-2;
  std::size_t max_steps = 200000;
};

/// Regression-theorem g2_{jk}(tau) from the full master equation: the
/// post-detection state a_k rho a_k^dag / Tr is propagated under L and
/// sampled with dense output.
CorrelatorSeries g2_tau_numeric(const DimerParams& p, const DriveSpec& d,
                                SitePair sites, std::span<const double> tau,
                                int cutoff = kDefaultCutoff,
                                IntegratorOptions opts = {});

/// Evenly spaced grid on [0, stop] with `count` points.
std::vector<double> default_tau_grid(double stop = 10.0, std::size_t count = 400);

struct PulsedRun {
  std::vector<double> t;
  std::vector<double> n1;
  std::vector<double> n2;
  /// Occupations and g2_22(0) at the pulse peak t = 0.
  double n1_at_peak = 0.0;
  double n2_at_peak = 0.0;
  std::optional<double> g2_22_at_peak;
  /// Two-time g2_22(0, tau) referenced to the pulse peak, on the
  /// non-negative part of `t`.
  std::vector<double> tau;
  std::vector<std::optional<double>> g2_22_tau;
};

/// Site 1 is driven CW at F1; site 2 receives F2 * exp(-t^2 / 2 sigma^2).
/// The run starts from the instantaneous steady state at t.front(), which
/// must be <= -5 sigma; t.back() must be >= 5 sigma.
PulsedRun time_evolve_pulsed(const DimerParams& p, const DriveSpec& d,
                             std::span<const double> t,
                             int cutoff = kDefaultCutoff,
                             IntegratorOptions opts = {});

}  // namespace upb::lindblad
