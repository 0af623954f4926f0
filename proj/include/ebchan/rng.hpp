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

#include <cmath>
#include <cstdint>
#include <random>

#include "ebchan/types.hpp"

namespace ebchan {

/// Seeded generator with fully specified output: mt19937_64 plus hand-rolled
/// uniform/Gaussian mapping, so results are bit-reproducible across standard
/// library implementations. No hidden global state anywhere in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; consumes exactly two uniforms.
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im);
  }

 private:
  std::mt19937_64 gen_;
};

inline Matrix ginibre(Rng& rng, Index rows, Index cols) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
  return g;
}

/// Columns form an orthonormal set distributed with Haar measure
/// (QR of a Ginibre matrix with the R-diagonal phase fix).
inline Matrix haar_isometry(Rng& rng, Index rows, Index cols) {
  Matrix g = ginibre(rng, rows, cols);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
  Matrix r = qr.matrixQR().topRows(cols).template triangularView<Eigen::Upper>();
  for (Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

inline Matrix haar_unitary(Rng& rng, Index d) { return haar_isometry(rng, d, d); }

inline Vector random_pure_vector(Rng& rng, Index d) {
  Vector v(d);
  for (Index i = 0; i < d; ++i) v(i) = rng.complex_gaussian();
  v.normalize();
  return v;
}

/// rho = G G^dag / Tr(G G^dag) with G a d x rank Ginibre matrix.
inline Matrix random_density_raw(Rng& rng, Index d, Index rank) {
  Matrix g = ginibre(rng, d, rank);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

}  // namespace ebchan
