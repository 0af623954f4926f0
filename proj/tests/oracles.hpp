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

// Test-only reference implementations, kept deliberately independent of the
// library code paths they check.

#pragma once

#include <cmath>
#include <vector>

#include "ebchan/qmath.hpp"
#include "ebchan/rng.hpp"
#include "ebchan/types.hpp"

namespace ebchan::oracle {

// Partial trace by brute-force summation over all multi-indices, using its
// own index arithmetic (single flat loop over row/col pairs, no composition
// of single traces).
inline Matrix partial_trace_bruteforce(const Matrix& m, const Dims& dims,
                                       const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  std::vector<char> kept(n, 0);
  for (int k : keep) kept[k] = 1;
  std::vector<Index> stride(n, 1);
  for (int k = n - 2; k >= 0; --k) stride[k] = stride[k + 1] * dims[k + 1];
  Index dkeep = 1;
  std::vector<Index> keep_stride(n, 0);
  for (int k = n - 1; k >= 0; --k)
    if (kept[k]) {
      keep_stride[k] = 1;
      for (int l = n - 1; l > k; --l)
        if (kept[l]) keep_stride[k] *= dims[l];
      dkeep *= dims[k];
    }
  const Index d = dims_product(dims);
  Matrix out = Matrix::Zero(dkeep, dkeep);
  std::vector<Index> ri(n), ci(n);
  for (Index r = 0; r < d; ++r) {
    Index rem = r;
    for (int k = 0; k < n; ++k) {
      ri[k] = rem / stride[k];
      rem %= stride[k];
    }
    for (Index c = 0; c < d; ++c) {
      rem = c;
      bool diag = true;
      for (int k = 0; k < n; ++k) {
        ci[k] = rem / stride[k];
        rem %= stride[k];
        if (!kept[k] && ci[k] != ri[k]) diag = false;
      }
      if (!diag) continue;
      Index ro = 0, co = 0;
      for (int k = 0; k < n; ++k)
        if (kept[k]) {
          ro += ri[k] * keep_stride[k];
          co += ci[k] * keep_stride[k];
        }
      out(ro, co) += m(r, c);
    }
  }
  return out;
}

// -sum p log2 p evaluated directly on a list of probabilities.
inline double entropy_direct(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

inline DensityMatrix random_state(Rng& rng, const Dims& dims, Index rank) {
  return DensityMatrix(random_density_raw(rng, dims_product(dims), rank), dims);
}

inline PureState random_pure(Rng& rng, const Dims& dims) {
  return PureState(random_pure_vector(rng, dims_product(dims)), dims);
}

inline PureState bell_state() {
  Vector v = Vector::Zero(4);
  v(0) = Complex(1.0 / std::sqrt(2.0), 0.0);
  v(3) = Complex(1.0 / std::sqrt(2.0), 0.0);
  return PureState(v, Dims{2, 2});
}

}  // namespace ebchan::oracle
