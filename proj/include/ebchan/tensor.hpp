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

#include <algorithm>
#include <numeric>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "ebchan/types.hpp"

// Free-function tensor algebra on Eigen expressions. Everything here works on
// raw matrices plus an explicit Dims list; the domain types in qmath.hpp wrap
// these with invariant checks.

namespace ebchan {

inline Index dims_product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), Index{1}, std::multiplies<>());
}

/// Kronecker product with the left factor varying slowest.
template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived());
}

template <typename DerivedA, typename DerivedB>
Vector kron_vec(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived());
}

inline Vector basis_vector(Index d, Index i) {
  Vector v = Vector::Zero(d);
  v(i) = Complex(1.0, 0.0);
  return v;
}

/// Trace out the single subsystem `sub` (0-based position in `dims`).
template <typename Derived>
Matrix trace_one_subsystem(const Eigen::MatrixBase<Derived>& m, const Dims& dims, int sub) {
  const Index n = static_cast<Index>(dims.size());
  if (sub < 0 || sub >= n) throw BadSubsystemIndex("subsystem index out of range");
  Index pre = 1, post = 1;
  for (int k = 0; k < sub; ++k) pre *= dims[k];
  for (Index k = sub + 1; k < n; ++k) post *= dims[k];
  const Index ds = dims[sub];
  const Index dout = pre * post;
  Matrix out = Matrix::Zero(dout, dout);
  for (Index p = 0; p < pre; ++p)
    for (Index q = 0; q < post; ++q)
      for (Index pp = 0; pp < pre; ++pp)
        for (Index qq = 0; qq < post; ++qq) {
          Complex acc(0.0, 0.0);
          for (Index s = 0; s < ds; ++s)
            acc += m((p * ds + s) * post + q, (pp * ds + s) * post + qq);
          out(p * post + q, pp * post + qq) = acc;
        }
  return out;
}

/// Partial trace over the subsystems NOT listed in `keep`. Implemented as a
/// composition of single-subsystem traces, lowest traced index first, so that
/// tracing subsystems one at a time in ascending order is bit-identical to
/// tracing them all at once.
template <typename Derived>
Matrix partial_trace_keep(const Eigen::MatrixBase<Derived>& m, const Dims& dims,
                          const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  if (keep.empty()) throw BadSubsystemIndex("keep set must be nonempty");
  std::vector<char> kept(n, 0);
  for (int k : keep) {
    if (k < 0 || k >= n) throw BadSubsystemIndex("keep index out of range");
    if (kept[k]) throw BadSubsystemIndex("duplicate keep index");
    kept[k] = 1;
  }
  Matrix cur = m;
  Dims cur_dims = dims;
  int removed = 0;
  for (int k = 0; k < n; ++k) {
    if (kept[k]) continue;
    cur = trace_one_subsystem(cur, cur_dims, k - removed);
    cur_dims.erase(cur_dims.begin() + (k - removed));
    ++removed;
  }
  return cur;
}

/// Transpose the first subsystem of a bipartite matrix on dims [da, db].
template <typename Derived>
Matrix partial_transpose_first(const Eigen::MatrixBase<Derived>& m, Index da, Index db) {
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index a = 0; a < db; ++a)
      for (Index j = 0; j < da; ++j)
        for (Index b = 0; b < db; ++b)
          out(i * db + a, j * db + b) = m(j * db + a, i * db + b);
  return out;
}

/// Reorder subsystems: entry `perm[k]` names the old subsystem that lands at
/// position k of the output.
template <typename Derived>
Matrix permute_subsystems(const Eigen::MatrixBase<Derived>& m, const Dims& dims,
                          const std::vector<int>& perm) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != n) throw BadSubsystemIndex("permutation length mismatch");
  Dims new_dims(n);
  for (int k = 0; k < n; ++k) new_dims[k] = dims[perm[k]];
  // Strides of each subsystem in the old and new index layouts.
  std::vector<Index> old_stride(n, 1), new_stride(n, 1);
  for (int k = n - 2; k >= 0; --k) old_stride[k] = old_stride[k + 1] * dims[k + 1];
  for (int k = n - 2; k >= 0; --k) new_stride[k] = new_stride[k + 1] * new_dims[k + 1];
  const Index d = dims_product(dims);
  // map[i_old] = i_new
  std::vector<Index> map(d);
  std::vector<Index> idx(n, 0);
  for (Index i = 0; i < d; ++i) {
    Index rem = i, tgt = 0;
    for (int k = 0; k < n; ++k) {
      idx[k] = rem / old_stride[k];
      rem %= old_stride[k];
    }
    for (int k = 0; k < n; ++k) tgt += idx[perm[k]] * new_stride[k];
    map[i] = tgt;
  }
  Matrix out(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) out(map[i], map[j]) = m(i, j);
  return out;
}

}  // namespace ebchan
