// Copyright 2026 The ebchan authors
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
#include <vector>

#include <Eigen/Dense>

namespace ebchan {

using Real = double;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Ordered list of subsystem dimensions. Subsystem ordering is row-major:
/// the composite index of (i_1, ..., i_n) is i_1 * d_2 * ... * d_n + ... + i_n,
/// i.e. the leftmost subsystem varies slowest. All tensor index arithmetic in
/// the library follows this convention.
using Dims = std::vector<Index>;

namespace tol {
inline constexpr double hermitian = 1e-9;   // max |rho - rho^dag| elementwise
inline constexpr double trace = 1e-9;       // |Tr rho - 1|
inline constexpr double psd = 1e-9;         // smallest eigenvalue >= -psd
inline constexpr double unit_norm = 1e-12;  // pure state normalization
inline constexpr double eig_drop = 1e-12;   // eigenvalue below which decomposition terms are dropped
inline constexpr double log_clamp = 1e-12;  // support clamp inside relative entropy
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define EBCHAN_DEFINE_ERROR(Name)    \
  class Name final : public Error {  \
   public:                           \
    using Error::Error;              \
  }

EBCHAN_DEFINE_ERROR(NotADensityMatrix);
EBCHAN_DEFINE_ERROR(NotHermitian);
EBCHAN_DEFINE_ERROR(DimensionMismatch);
EBCHAN_DEFINE_ERROR(BadSubsystemIndex);
EBCHAN_DEFINE_ERROR(BadSubsystemCount);
EBCHAN_DEFINE_ERROR(WeightMismatch);
EBCHAN_DEFINE_ERROR(InvalidHolevoForm);
EBCHAN_DEFINE_ERROR(BadParams);
EBCHAN_DEFINE_ERROR(ParseError);
EBCHAN_DEFINE_ERROR(ValidationError);
EBCHAN_DEFINE_ERROR(TraceInfeasible);

#undef EBCHAN_DEFINE_ERROR

}  // namespace ebchan
