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

#include "upb/fock.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace upb::fock {

int dimension(int cutoff) { return (cutoff + 1) * (cutoff + 1); }

int state_index(int cutoff, int n1, int n2) { return n1 * (cutoff + 1) + n2; }

void check_cutoff(int cutoff) {
  if (cutoff < 1 || cutoff > kMaxCutoff) {
    throw CutoffError("Fock cutoff " + std::to_string(cutoff) +
                      " outside [1, " + std::to_string(kMaxCutoff) + "]");
  }
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<Eigen::Triplet<cplx>> entries;
  entries.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka) {
    for (SparseMatrix::InnerIterator ia(a, ka); ia; ++ia) {
      for (int kb = 0; kb < b.outerSize(); ++kb) {
        for (SparseMatrix::InnerIterator ib(b, kb); ib; ++ib) {
          entries.emplace_back(ia.row() * b.rows() + ib.row(),
                               ia.col() * b.cols() + ib.col(),
                               ia.value() * ib.value());
        }
      }
    }
  }
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(entries.begin(), entries.end());
  return out;
}

SparseMatrix single_mode_destroy(int cutoff) {
  SparseMatrix a(cutoff + 1, cutoff + 1);
  std::vector<Eigen::Triplet<cplx>> entries;
  for (int n = 1; n <= cutoff; ++n) {
    entries.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  }
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

namespace {

SparseMatrix single_mode_identity(int cutoff) {
  SparseMatrix id(cutoff + 1, cutoff + 1);
  id.setIdentity();
  return id;
}

}  // namespace

QuantumOperator::QuantumOperator(int cutoff, SparseMatrix matrix)
    : cutoff_(cutoff), matrix_(std::move(matrix)) {
  if (matrix_.rows() != dimension(cutoff) || matrix_.cols() != dimension(cutoff)) {
    throw std::invalid_argument("operator shape does not match cutoff");
  }
  matrix_.makeCompressed();
}

QuantumOperator QuantumOperator::adjoint() const {
  return {cutoff_, SparseMatrix(matrix_.adjoint())};
}

cplx QuantumOperator::element(int n1, int n2, int m1, int m2) const {
  return matrix_.coeff(state_index(cutoff_, n1, n2), state_index(cutoff_, m1, m2));
}

QuantumOperator QuantumOperator::operator+(const QuantumOperator& rhs) const {
  return {cutoff_, SparseMatrix(matrix_ + rhs.matrix_)};
}

QuantumOperator QuantumOperator::operator-(const QuantumOperator& rhs) const {
  return {cutoff_, SparseMatrix(matrix_ - rhs.matrix_)};
}

QuantumOperator QuantumOperator::operator*(const QuantumOperator& rhs) const {
  return {cutoff_, SparseMatrix(matrix_ * rhs.matrix_)};
}

QuantumOperator operator*(cplx s, const QuantumOperator& op) {
  return {op.cutoff_, SparseMatrix(s * op.matrix_)};
}

DensityMatrix::DensityMatrix(int cutoff, DenseMatrix matrix)
    : cutoff_(cutoff), matrix_(std::move(matrix)) {
  if (matrix_.rows() != dimension(cutoff) || matrix_.cols() != dimension(cutoff)) {
    throw std::invalid_argument("density matrix shape does not match cutoff");
  }
}

double DensityMatrix::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  const DenseMatrix herm = (matrix_ + matrix_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix DensityMatrix::hermitized() const {
  DenseMatrix herm = (matrix_ + matrix_.adjoint()) / 2.0;
  herm /= herm.trace().real();
  return {cutoff_, std::move(herm)};
}

bool DensityMatrix::is_physical() const {
  return std::abs(trace() - 1.0) < 1e-10 && hermiticity_error() < 1e-10 &&
         min_eigenvalue() > -1e-8;
}

DensityMatrix DensityMatrix::pure(int cutoff, const ComplexVector& psi) {
  return {cutoff, psi * psi.adjoint() / psi.squaredNorm()};
}

DensityMatrix DensityMatrix::fock_projector(int cutoff, int n1, int n2) {
  return pure(cutoff, basis_state(cutoff, n1, n2));
}

QuantumOperator identity(int cutoff) {
  check_cutoff(cutoff);
  SparseMatrix id(dimension(cutoff), dimension(cutoff));
  id.setIdentity();
  return {cutoff, std::move(id)};
}

QuantumOperator destroy(int cutoff, Site site) {
  check_cutoff(cutoff);
  const SparseMatrix a = single_mode_destroy(cutoff);
  const SparseMatrix id = single_mode_identity(cutoff);
  return {cutoff, site == Site::one ? kron(a, id) : kron(id, a)};
}

QuantumOperator create(int cutoff, Site site) {
  return destroy(cutoff, site).adjoint();
}

QuantumOperator number(int cutoff, Site site) {
  return create(cutoff, site) * destroy(cutoff, site);
}

ComplexVector basis_state(int cutoff, int n1, int n2) {
  check_cutoff(cutoff);
  if (n1 < 0 || n2 < 0 || n1 > cutoff || n2 > cutoff) {
    throw std::invalid_argument("occupation outside the truncated space");
  }
  ComplexVector psi = ComplexVector::Zero(dimension(cutoff));
  psi(state_index(cutoff, n1, n2)) = 1.0;
  return psi;
}

cplx expect(const QuantumOperator& op, const DensityMatrix& rho) {
  if (op.dim() != rho.dim()) {
    throw std::invalid_argument("expect: dimension mismatch (" +
                                std::to_string(op.dim()) + " vs " +
                                std::to_string(rho.dim()) + ")");
  }
  // Tr(A rho) = sum_{ij} A_ij rho_ji
  cplx acc = 0.0;
  const SparseMatrix& a = op.matrix();
  for (int k = 0; k < a.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(a, k); it; ++it) {
      acc += it.value() * rho.matrix()(it.col(), it.row());
    }
  }
  return acc;
}

}  // namespace upb::fock
