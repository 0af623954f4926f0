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

#include <vector>

#include "ebchan/tensor.hpp"
#include "ebchan/types.hpp"

namespace ebchan {

/// Positive-semidefinite unit-trace matrix with declared subsystem
/// dimensions. Construction validates Hermiticity, trace and positivity at
/// the library tolerances; instances are immutable afterwards.
class DensityMatrix {
 public:
  DensityMatrix(Matrix data, Dims dims);

  const Matrix& data() const { return data_; }
  const Dims& dims() const { return dims_; }
  Index dim() const { return data_.rows(); }
  Index subsystems() const { return static_cast<Index>(dims_.size()); }

  /// Wraps without validating. For channel outputs and other matrices that
  /// are valid by construction.
  static DensityMatrix unchecked(Matrix data, Dims dims);

 private:
  struct UncheckedTag {};
  DensityMatrix(Matrix data, Dims dims, UncheckedTag);

  Matrix data_;
  Dims dims_;
};

class PureState {
 public:
  PureState(Vector vec, Dims dims);

  const Vector& vec() const { return vec_; }
  const Dims& dims() const { return dims_; }
  Index dim() const { return vec_.size(); }

  Matrix projector() const { return vec_ * vec_.adjoint(); }
  DensityMatrix to_density() const { return DensityMatrix::unchecked(projector(), dims_); }

 private:
  Vector vec_;
  Dims dims_;
};

/// Eigenvalues in descending order with matching orthonormal eigenvectors
/// (columns). Eigenvalues in [-tol::psd, 0) are clamped to zero.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

double von_neumann_entropy(const DensityMatrix& rho);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the subsystems in `keep` (0-based positions, kept in
/// their original order).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Spectral decomposition of a Hermitian PSD matrix. Throws NotHermitian if
/// the input is not Hermitian within tol::hermitian.
Spectrum eig_psd(const Matrix& m);

/// Purification on dims [d, d]: sum_k sqrt(lambda_k) |v_k> (x) |k>, with the
/// reference factor in the computational basis. The second factor always has
/// the full dimension d regardless of rank.
PureState purify(const DensityMatrix& rho);

/// Block-diagonal classical-quantum state sum_j w_j gamma_j (x) |j><j| with
/// the flag register appended as the last subsystem.
DensityMatrix cq_embed(const std::vector<double>& weights,
                       const std::vector<DensityMatrix>& blocks);

namespace detail {

/// Entropy in bits of a raw matrix assumed Hermitian PSD; negative
/// eigenvalues are clamped to zero without complaint.
double entropy_raw(const Matrix& m);

double entropy_of_eigenvalues(const RealVector& lambda);

/// Shannon entropy in bits of a probability vector.
double shannon_entropy(const std::vector<double>& p);

/// Quantum relative entropy D(sigma || tau) in bits, with tau eigenvalues
/// clamped at tol::log_clamp so mismatched supports stay finite.
double relative_entropy_raw(const Matrix& sigma, const Matrix& tau);

bool is_hermitian(const Matrix& m, double eps);

}  // namespace detail

}  // namespace ebchan
