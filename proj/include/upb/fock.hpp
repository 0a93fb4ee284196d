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

#include "upb/types.hpp"

// Operators on the truncated two-mode Fock space. A basis state |n1, n2>
// lives at index n1 * (cutoff + 1) + n2, i.e. site 1 is the left tensor
// factor.

namespace upb::fock {

inline constexpr int kMaxCutoff = 30;

/// Total Hilbert dimension (cutoff + 1)^2.
int dimension(int cutoff);

/// Index of |n1, n2>.
int state_index(int cutoff, int n1, int n2);

/// Throws CutoffError unless 1 <= cutoff <= kMaxCutoff.
void check_cutoff(int cutoff);

/// Kronecker product; entries of `a` select blocks, `b` fills them.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Single-mode ladder operator on {0..cutoff}.
SparseMatrix single_mode_destroy(int cutoff);

class QuantumOperator {
 public:
  QuantumOperator(int cutoff, SparseMatrix matrix);

  int cutoff() const { return cutoff_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const SparseMatrix& matrix() const { return matrix_; }

  QuantumOperator adjoint() const;

  /// Matrix element <n1 n2| A |m1 m2>.
  cplx element(int n1, int n2, int m1, int m2) const;

  QuantumOperator operator+(const QuantumOperator& rhs) const;
  QuantumOperator operator-(const QuantumOperator& rhs) const;
  QuantumOperator operator*(const QuantumOperator& rhs) const;
  friend QuantumOperator operator*(cplx s, const QuantumOperator& op);

 private:
  int cutoff_;
  SparseMatrix matrix_;
};

/// Dense density matrix on the same space as QuantumOperator.
class DensityMatrix {
 public:
  DensityMatrix(int cutoff, DenseMatrix matrix);

  int cutoff() const { return cutoff_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const DenseMatrix& matrix() const { return matrix_; }

  cplx trace() const { return matrix_.trace(); }
  /// max |rho - rho^dag|
  double hermiticity_error() const;
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;

  /// (rho + rho^dag) / 2 rescaled to unit trace.
  DensityMatrix hermitized() const;

  /// Trace within 1e-10, Hermitian within 1e-10, eigenvalues above -1e-8.
  bool is_physical() const;

  static DensityMatrix pure(int cutoff, const ComplexVector& psi);
  static DensityMatrix fock_projector(int cutoff, int n1, int n2);

 private:
  int cutoff_;
  DenseMatrix matrix_;
};

QuantumOperator identity(int cutoff);
QuantumOperator destroy(int cutoff, Site site);
QuantumOperator create(int cutoff, Site site);
QuantumOperator number(int cutoff, Site site);

ComplexVector basis_state(int cutoff, int n1, int n2);

/// Tr(A rho). Throws std::invalid_argument on a dimension mismatch.
cplx expect(const QuantumOperator& op, const DensityMatrix& rho);

}  // namespace upb::fock
