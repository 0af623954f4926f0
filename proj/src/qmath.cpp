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

#include "ebchan/qmath.hpp"

#include <cmath>

namespace ebchan {

namespace detail {

bool is_hermitian(const Matrix& m, double eps) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

double entropy_of_eigenvalues(const RealVector& lambda) {
  double h = 0.0;
  for (Index i = 0; i < lambda.size(); ++i) {
    const double x = lambda(i);
    if (x > 0.0) h -= x * std::log2(x);
  }
  // roundoff on a near-pure spectrum can land epsilon-negative
  return std::max(h, 0.0);
}

double entropy_raw(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return entropy_of_eigenvalues(es.eigenvalues());
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double relative_entropy_raw(const Matrix& sigma, const Matrix& tau) {
  Eigen::SelfAdjointEigenSolver<Matrix> es_s(sigma);
  Eigen::SelfAdjointEigenSolver<Matrix> es_t(tau);
  // Tr(sigma log2 sigma)
  double tr_slogs = 0.0;
  for (Index i = 0; i < sigma.rows(); ++i) {
    const double x = es_s.eigenvalues()(i);
    if (x > 0.0) tr_slogs += x * std::log2(x);
  }
  // Tr(sigma log2 tau) = sum_j log2(mu_j) <u_j| sigma |u_j>
  double tr_slogt = 0.0;
  for (Index j = 0; j < tau.rows(); ++j) {
    const double mu = std::max(es_t.eigenvalues()(j), tol::log_clamp);
    const Vector u = es_t.eigenvectors().col(j);
    const double w = std::real(u.dot(sigma * u));
    tr_slogt += std::log2(mu) * w;
  }
  return tr_slogs - tr_slogt;
}

}  // namespace detail

DensityMatrix::DensityMatrix(Matrix data, Dims dims, UncheckedTag)
    : data_(std::move(data)), dims_(std::move(dims)) {}

DensityMatrix DensityMatrix::unchecked(Matrix data, Dims dims) {
  return DensityMatrix(std::move(data), std::move(dims), UncheckedTag{});
}

DensityMatrix::DensityMatrix(Matrix data, Dims dims)
    : data_(std::move(data)), dims_(std::move(dims)) {
  if (data_.rows() != data_.cols()) throw NotADensityMatrix("matrix is not square");
  if (dims_.empty()) throw NotADensityMatrix("dims must be nonempty");
  for (Index d : dims_)
    if (d < 1) throw NotADensityMatrix("subsystem dimensions must be positive");
  if (dims_product(dims_) != data_.rows())
    throw NotADensityMatrix("product of dims does not match matrix dimension");
  if (!detail::is_hermitian(data_, tol::hermitian))
    throw NotADensityMatrix("matrix is not Hermitian within tolerance");
  const double tr = std::real(data_.trace());
  if (std::abs(tr - 1.0) > tol::trace)
    throw NotADensityMatrix("trace differs from 1 beyond tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(data_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::psd)
    throw NotADensityMatrix("matrix has an eigenvalue below -psd tolerance");
}

PureState::PureState(Vector vec, Dims dims) : vec_(std::move(vec)), dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionMismatch("dims must be nonempty");
  if (dims_product(dims_) != vec_.size())
    throw DimensionMismatch("product of dims does not match vector length");
  if (std::abs(vec_.norm() - 1.0) > tol::unit_norm)
    throw NotADensityMatrix("state vector is not normalized");
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.data(), Eigen::EigenvaluesOnly);
  RealVector lambda = es.eigenvalues();
  for (Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) < 0.0) lambda(i) = 0.0;  // within -tol::psd by construction
  return detail::entropy_of_eigenvalues(lambda);
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::unchecked(kron(a.data(), b.data()), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  Matrix reduced = partial_trace_keep(rho.data(), rho.dims(), keep);
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  Dims dims;
  dims.reserve(sorted.size());
  for (int k : sorted) dims.push_back(rho.dims()[k]);
  return DensityMatrix::unchecked(std::move(reduced), std::move(dims));
}

Spectrum eig_psd(const Matrix& m) {
  if (!detail::is_hermitian(m, tol::hermitian))
    throw NotHermitian("matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Index d = m.rows();
  Spectrum sp;
  sp.eigenvalues = RealVector(d);
  sp.eigenvectors = Matrix(d, d);
  for (Index i = 0; i < d; ++i) {  // ascending -> descending
    double lambda = es.eigenvalues()(d - 1 - i);
    if (lambda < 0.0 && lambda >= -tol::psd) lambda = 0.0;
    sp.eigenvalues(i) = lambda;
    sp.eigenvectors.col(i) = es.eigenvectors().col(d - 1 - i);
  }
  return sp;
}

PureState purify(const DensityMatrix& rho) {
  const Spectrum sp = eig_psd(rho.data());
  const Index d = rho.dim();
  Vector psi = Vector::Zero(d * d);
  for (Index k = 0; k < d; ++k) {
    const double lambda = sp.eigenvalues(k);
    if (lambda <= 0.0) continue;
    const double r = std::sqrt(lambda);
    for (Index i = 0; i < d; ++i) psi(i * d + k) += r * sp.eigenvectors(i, k);
  }
  psi.normalize();
  return PureState(std::move(psi), Dims{d, d});
}

DensityMatrix cq_embed(const std::vector<double>& weights,
                       const std::vector<DensityMatrix>& blocks) {
  if (weights.size() != blocks.size())
    throw WeightMismatch("weights and blocks must have equal length");
  if (weights.empty()) throw WeightMismatch("need at least one block");
  double sum = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw WeightMismatch("weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw WeightMismatch("weights must sum to 1");
  const Dims& block_dims = blocks.front().dims();
  for (const DensityMatrix& b : blocks)
    if (b.dims() != block_dims) throw DimensionMismatch("blocks must share dims");
  const Index db = blocks.front().dim();
  const Index m = static_cast<Index>(blocks.size());
  Matrix out = Matrix::Zero(db * m, db * m);
  for (Index j = 0; j < m; ++j) {
    // gamma_j (x) |j><j| occupies rows/cols with flag index j.
    for (Index r = 0; r < db; ++r)
      for (Index c = 0; c < db; ++c)
        out(r * m + j, c * m + j) = weights[j] * blocks[j].data()(r, c);
  }
  Dims dims = block_dims;
  dims.push_back(m);
  return DensityMatrix::unchecked(std::move(out), std::move(dims));
}

}  // namespace ebchan
