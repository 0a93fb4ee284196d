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

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "upb/fock.hpp"

using namespace upb;
using namespace upb::fock;

TEST_SUITE("fock") {

TEST_CASE("dimension and indexing") {
  CHECK(dimension(7) == 64);
  CHECK(dimension(1) == 4);
  CHECK(state_index(3, 2, 1) == 9);
  CHECK_THROWS_AS(check_cutoff(0), CutoffError);
  CHECK_THROWS_AS(check_cutoff(31), CutoffError);
  CHECK_NOTHROW(check_cutoff(30));
  CHECK_THROWS_AS(destroy(0, Site::one), CutoffError);
}

TEST_CASE("ladder matrix elements") {
  const auto a1 = destroy(1, Site::one);
  const ComplexVector out = a1.matrix() * basis_state(1, 1, 0);
  CHECK(std::abs(out(state_index(1, 0, 0)) - 1.0) < 1e-15);
  CHECK(std::abs(out.norm() - 1.0) < 1e-15);

  const auto a2 = destroy(2, Site::two);
  const ComplexVector out2 = a2.matrix() * basis_state(2, 0, 2);
  CHECK(std::abs(out2(state_index(2, 0, 1)) - std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(out2.norm() - std::sqrt(2.0)) < 1e-15);

  const auto psi = DensityMatrix::pure(3, basis_state(3, 1, 1));
  CHECK(std::abs(expect(number(3, Site::one), psi) - 1.0) < 1e-15);
}

TEST_CASE("expectation values") {
  const int n = 4;
  std::mt19937_64 rng(7);
  const auto rho = testing::random_density(n, rng);
  CHECK(std::abs(expect(identity(n), rho) - 1.0) < 1e-12);
  CHECK(std::abs(expect(number(n, Site::two), DensityMatrix::fock_projector(n, 0, 0))) < 1e-15);
  CHECK(std::abs(expect(number(n, Site::one) + number(n, Site::two),
                        DensityMatrix::fock_projector(n, 1, 1)) - 2.0) < 1e-15);
  // Hermitian observables have real expectations.
  CHECK(std::abs(expect(number(n, Site::one), rho).imag()) < 1e-10);
  CHECK_THROWS_AS(expect(number(3, Site::one), rho), std::invalid_argument);
}

TEST_CASE("commutator is identity below the cutoff") {
  const int n = 6;
  for (Site s : {Site::one, Site::two}) {
    const auto a = destroy(n, s);
    const DenseMatrix comm = DenseMatrix((a * a.adjoint() - a.adjoint() * a).matrix());
    for (int n1 = 0; n1 <= n; ++n1) {
      for (int n2 = 0; n2 <= n; ++n2) {
        const int occ = s == Site::one ? n1 : n2;
        const int i = state_index(n, n1, n2);
        const cplx expected = occ < n ? 1.0 : -static_cast<double>(n);
        CHECK(std::abs(comm(i, i) - expected) < 1e-12);
      }
    }
    CHECK((comm - DenseMatrix(comm.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("adjoint properties") {
  const int n = 3;
  const auto a1 = destroy(n, Site::one);
  const auto a2 = destroy(n, Site::two);
  const auto op = cplx(0.3, -1.2) * (a1 * a2.adjoint()) + a2;
  const DenseMatrix twice = DenseMatrix(op.adjoint().adjoint().matrix());
  CHECK(twice == DenseMatrix(op.matrix()));

  SparseMatrix a = single_mode_destroy(n);
  a.coeffRef(0, 2) = cplx(0.5, 0.25);
  SparseMatrix b = single_mode_destroy(n).transpose();
  b.coeffRef(3, 0) = cplx(-1.0, 2.0);
  const DenseMatrix lhs = DenseMatrix(SparseMatrix(kron(a, b).adjoint()));
  const SparseMatrix aa = a.adjoint(), ba = b.adjoint();
  const DenseMatrix rhs = DenseMatrix(kron(aa, ba));
  CHECK(lhs == rhs);
}

TEST_CASE("kron associativity") {
  SparseMatrix a = single_mode_destroy(2);
  SparseMatrix b = single_mode_destroy(1).transpose();
  SparseMatrix c = single_mode_destroy(2);
  c.coeffRef(0, 0) = cplx(0, 1);
  const DenseMatrix left = DenseMatrix(kron(kron(a, b), c));
  const DenseMatrix right = DenseMatrix(kron(a, kron(b, c)));
  CHECK(left == right);
}

TEST_CASE("site ordering: site one is the left factor") {
  const int n = 2;
  const auto a1 = destroy(n, Site::one);
  CHECK(std::abs(a1.element(0, 1, 1, 1) - 1.0) < 1e-15);
  CHECK(std::abs(a1.element(0, 1, 0, 2)) < 1e-15);
}

TEST_CASE("density matrix checks") {
  std::mt19937_64 rng(11);
  const auto rho = testing::random_density(3, rng);
  CHECK(rho.is_physical());
  CHECK(rho.hermiticity_error() < 1e-14);
  CHECK(rho.min_eigenvalue() > -1e-12);

  DenseMatrix bad = rho.matrix();
  bad(0, 1) += cplx(0.0, 1e-3);
  const DensityMatrix skew(3, bad);
  CHECK_FALSE(skew.is_physical());
  CHECK(skew.hermitized().hermiticity_error() < 1e-15);
  CHECK(std::abs(skew.hermitized().trace() - 1.0) < 1e-14);

  DenseMatrix neg = DenseMatrix::Zero(16, 16);
  neg(0, 0) = 1.5;
  neg(1, 1) = -0.5;
  CHECK_FALSE(DensityMatrix(3, neg).is_physical());
}

}  // TEST_SUITE
