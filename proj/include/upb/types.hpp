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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace upb {

using cplx = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<cplx>;
using DenseMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;

enum class Site { one = 1, two = 2 };

inline int site_number(Site s) { return static_cast<int>(s); }

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fock cutoff outside the supported range.
class CutoffError : public Error {
 public:
  using Error::Error;
};

/// Hopping at or below the existence threshold of a closed-form locus.
class ThresholdError : public Error {
 public:
  using Error::Error;
};

/// Hopping at decay / 2, where the locus collapses onto the linear dark
/// state and the site-2 correlators are 0/0.
class DarkStateError : public Error {
 public:
  using Error::Error;
};

/// Vanishing denominator in a closed-form expression.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// Singular one- or two-photon amplitude system.
class ResonanceError : public Error {
 public:
  using Error::Error;
};

/// Liouvillian without a unique trace-one steady state.
class DegenerateSteadyStateError : public Error {
 public:
  using Error::Error;
};

/// Configuration file that cannot be parsed or holds invalid values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Output path that cannot be opened or written.
class OutputError : public Error {
 public:
  using Error::Error;
};

/// Adaptive integration could not reach the requested time.
class PropagationError : public Error {
 public:
  PropagationError(const std::string& what, double reached)
      : Error(what + " (reached t = " + std::to_string(reached) + ")"),
        reached_(reached) {}

  double reached() const { return reached_; }

 private:
  double reached_;
};

}  // namespace upb
