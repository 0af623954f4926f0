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

#include "ebchan/channels.hpp"

#include <cmath>

namespace ebchan {

namespace detail {

Matrix apply_raw(const KrausChannel& ch, const Matrix& m) {
  Matrix out = Matrix::Zero(ch.d_out(), ch.d_out());
  for (const Matrix& a : ch.ops()) out += a * m * a.adjoint();
  return out;
}

Matrix apply_raw(const HolevoFormChannel& ch, const Matrix& m) {
  Matrix out = Matrix::Zero(ch.d_out(), ch.d_out());
  for (Index i = 0; i < ch.size(); ++i)
    out += (ch.povm()[i] * m).trace() * ch.outputs()[i].data();
  return out;
}

Matrix apply_raw(const Channel& ch, const Matrix& m) {
  if (ch.has_holevo()) return apply_raw(ch.holevo(), m);
  return apply_raw(ch.kraus(), m);
}

}  // namespace detail

KrausChannel::KrausChannel(std::vector<Matrix> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw BadParams("Kraus channel needs at least one operator");
  d_out_ = ops_.front().rows();
  d_in_ = ops_.front().cols();
  if (d_in_ < 1 || d_out_ < 1) throw BadParams("Kraus operators must be nonempty");
  for (const Matrix& a : ops_)
    if (a.rows() != d_out_ || a.cols() != d_in_)
      throw DimensionMismatch("Kraus operators must share a common shape");
}

HolevoFormChannel::HolevoFormChannel(std::vector<Matrix> povm,
                                     std::vector<DensityMatrix> outputs)
    : povm_(std::move(povm)), outputs_(std::move(outputs)) {
  if (povm_.empty()) throw InvalidHolevoForm("POVM must be nonempty");
  if (povm_.size() != outputs_.size())
    throw InvalidHolevoForm("POVM and output lists must have equal length");
  d_in_ = povm_.front().rows();
  d_out_ = outputs_.front().dim();
  Matrix sum = Matrix::Zero(d_in_, d_in_);
  for (const Matrix& x : povm_) {
    if (x.rows() != d_in_ || x.cols() != d_in_)
      throw InvalidHolevoForm("POVM elements must be square with a common dimension");
    if (!detail::is_hermitian(x, tol::hermitian))
      throw InvalidHolevoForm("POVM element is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(x, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol::psd)
      throw InvalidHolevoForm("POVM element is not positive semidefinite");
    sum += x;
  }
  const double residual = (sum - Matrix::Identity(d_in_, d_in_)).norm();
  if (residual > tol::trace)
    throw InvalidHolevoForm("POVM does not sum to the identity; residual " +
                            std::to_string(residual));
  for (const DensityMatrix& t : outputs_)
    if (t.dim() != d_out_) throw InvalidHolevoForm("output states must share a dimension");
}

double ProductDecomposition::total_weight() const {
  double s = 0.0;
  for (const ProductTerm& t : terms) s += t.weight;
  return s;
}

Matrix ProductDecomposition::reconstruct() const {
  if (terms.empty()) throw BadParams("empty decomposition");
  const Index da = terms.front().a.dim();
  const Index db = terms.front().b.dim();
  Matrix out = Matrix::Zero(da * db, da * db);
  for (const ProductTerm& t : terms)
    out += t.weight * kron(t.a.projector(), t.b.projector());
  return out;
}

Channel::Channel(KrausChannel kraus) : kraus_(std::move(kraus)) {}

Channel::Channel(HolevoFormChannel holevo)
    : kraus_(holevo_to_kraus(holevo)), holevo_(std::move(holevo)) {}

const HolevoFormChannel& Channel::holevo() const {
  if (!holevo_) throw BadParams("channel has no Holevo form");
  return *holevo_;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.d_in()) throw DimensionMismatch("input dimension does not match channel");
  return DensityMatrix::unchecked(detail::apply_raw(ch, rho.data()), Dims{ch.d_out()});
}

DensityMatrix apply(const Channel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.d_in()) throw DimensionMismatch("input dimension does not match channel");
  return DensityMatrix::unchecked(detail::apply_raw(ch, rho.data()), Dims{ch.d_out()});
}

DensityMatrix holevo_apply(const HolevoFormChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.d_in()) throw DimensionMismatch("input dimension does not match channel");
  return DensityMatrix::unchecked(detail::apply_raw(ch, rho.data()), Dims{ch.d_out()});
}

KrausChannel holevo_to_kraus(const HolevoFormChannel& ch) {
  std::vector<Matrix> ops;
  for (Index i = 0; i < ch.size(); ++i) {
    const Spectrum sx = eig_psd(ch.povm()[i]);
    const Spectrum st = eig_psd(ch.outputs()[i].data());
    for (Index k = 0; k < sx.eigenvalues.size(); ++k) {
      const double mu = sx.eigenvalues(k);
      if (mu < tol::eig_drop) continue;
      for (Index l = 0; l < st.eigenvalues.size(); ++l) {
        const double lambda = st.eigenvalues(l);
        if (lambda < tol::eig_drop) continue;
        // sqrt(lambda mu) |t_il><x_ik|
        ops.push_back(std::sqrt(lambda * mu) * st.eigenvectors.col(l) *
                      sx.eigenvectors.col(k).adjoint());
      }
    }
  }
  if (ops.empty()) throw InvalidHolevoForm("Holevo form has no nonzero POVM eigenvalues");
  return KrausChannel(std::move(ops));
}

DensityMatrix choi_matrix(const KrausChannel& ch) {
  const Index din = ch.d_in();
  const Index dout = ch.d_out();
  const double scale = 1.0 / std::sqrt(static_cast<double>(din));
  Matrix j = Matrix::Zero(din * dout, din * dout);
  for (const Matrix& a : ch.ops()) {
    // (I (x) A) |Omega> has amplitude A(o, i) / sqrt(d_in) at index (i, o).
    Vector v(din * dout);
    for (Index i = 0; i < din; ++i)
      for (Index o = 0; o < dout; ++o) v(i * dout + o) = scale * a(o, i);
    j += v * v.adjoint();
  }
  return DensityMatrix::unchecked(std::move(j), Dims{din, dout});
}

CptDiagnostics validate_cpt(const KrausChannel& ch, double tol_) {
  const Index din = ch.d_in();
  Matrix sum = Matrix::Zero(din, din);
  for (const Matrix& a : ch.ops()) sum += a.adjoint() * a;
  const double tp_residual = (sum - Matrix::Identity(din, din)).norm();
  const Matrix j = choi_matrix(ch).data();
  Eigen::SelfAdjointEigenSolver<Matrix> es(((j + j.adjoint()) / 2.0).eval(),
                                           Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  CptDiagnostics diag;
  diag.tp_residual = tp_residual;
  diag.choi_min_eig = min_eig;
  diag.tol = tol_;
  diag.pass = tp_residual <= tol_ && min_eig >= -tol_;
  return diag;
}

KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b) {
  std::vector<Matrix> ops;
  ops.reserve(a.ops().size() * b.ops().size());
  for (const Matrix& x : a.ops())
    for (const Matrix& y : b.ops()) ops.push_back(kron(x, y));
  return KrausChannel(std::move(ops));
}

Channel tensor_channels(const Channel& a, const Channel& b) {
  return Channel(tensor_channels(a.kraus(), b.kraus()));
}

Channel make_identity(Index d) {
  if (d < 1) throw BadParams("dimension must be positive");
  return Channel(KrausChannel({Matrix::Identity(d, d)}));
}

Channel make_depolarizing(double p, Index d) {
  if (d < 1) throw BadParams("dimension must be positive");
  if (p < 0.0 || p > 1.0) throw BadParams("depolarizing parameter must lie in [0, 1]");
  // Weyl operators W_{jk} = X^j Z^k. Averaging rho over all of them yields I/d,
  // so (1-p) rho + p I/d has Kraus set
  //   sqrt(1 - p + p/d^2) I  and  sqrt(p/d^2) W_{jk}, (j,k) != (0,0).
  const double dd = static_cast<double>(d * d);
  std::vector<Matrix> ops;
  ops.push_back(std::sqrt(1.0 - p + p / dd) * Matrix::Identity(d, d));
  if (p > 0.0) {
    const double w = std::sqrt(p / dd);
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k) {
        if (j == 0 && k == 0) continue;
        Matrix op = Matrix::Zero(d, d);
        for (Index m = 0; m < d; ++m) {
          const double phase = 2.0 * M_PI * static_cast<double>(k * m) / static_cast<double>(d);
          op((m + j) % d, m) = w * Complex(std::cos(phase), std::sin(phase));
        }
        ops.push_back(std::move(op));
      }
  }
  return Channel(KrausChannel(std::move(ops)));
}

Channel make_cq(const std::vector<Vector>& basis, std::vector<DensityMatrix> outputs) {
  if (basis.empty() || basis.size() != outputs.size())
    throw BadParams("c-q channel needs one output state per basis vector");
  const Index d = basis.front().size();
  if (static_cast<Index>(basis.size()) != d)
    throw BadParams("c-q basis must be complete (d vectors of dimension d)");
  for (const Vector& v : basis)
    if (v.size() != d) throw BadParams("basis vectors must share a dimension");
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const double ip = std::abs(basis[i].dot(basis[j]) - (i == j ? Complex(1) : Complex(0)));
      if (ip > 1e-10) throw BadParams("c-q basis is not orthonormal");
    }
  std::vector<Matrix> povm;
  povm.reserve(basis.size());
  for (const Vector& v : basis) povm.push_back(v * v.adjoint());
  return Channel(HolevoFormChannel(std::move(povm), std::move(outputs)));
}

Channel make_qc(std::vector<Matrix> povm) {
  if (povm.empty()) throw BadParams("q-c channel needs a nonempty POVM");
  const Index m = static_cast<Index>(povm.size());
  std::vector<DensityMatrix> outputs;
  outputs.reserve(povm.size());
  for (Index i = 0; i < m; ++i) {
    Matrix proj = Matrix::Zero(m, m);
    proj(i, i) = Complex(1.0, 0.0);
    outputs.push_back(DensityMatrix::unchecked(std::move(proj), Dims{m}));
  }
  return Channel(HolevoFormChannel(std::move(povm), std::move(outputs)));
}

EbCertificate is_entanglement_breaking(const KrausChannel& ch) {
  const DensityMatrix j = choi_matrix(ch);
  const Matrix pt = partial_transpose_first(j.data(), ch.d_in(), ch.d_out());
  Eigen::SelfAdjointEigenSolver<Matrix> es(((pt + pt.adjoint()) / 2.0).eval(),
                                           Eigen::EigenvaluesOnly);
  EbCertificate cert;
  cert.pt_min_eigenvalue = es.eigenvalues().minCoeff();
  if (cert.pt_min_eigenvalue < -tol::psd)
    cert.verdict = EbVerdict::NOT_EB_certified;
  else if (ch.d_in() * ch.d_out() <= 6)
    cert.verdict = EbVerdict::EB_certified;  // PPT is exact in 2x2 and 2x3
  else
    cert.verdict = EbVerdict::UNKNOWN;
  return cert;
}

ProductDecomposition separable_output_decomposition(const HolevoFormChannel& ch,
                                                    const DensityMatrix& rho_ab) {
  if (rho_ab.subsystems() != 2)
    throw DimensionMismatch("input must have exactly two declared subsystems");
  const Index da = rho_ab.dims()[0];
  const Index db = rho_ab.dims()[1];
  if (db != ch.d_in()) throw DimensionMismatch("second subsystem must match channel input");
  const Matrix& rho = rho_ab.data();
  ProductDecomposition decomp;
  for (Index i = 0; i < ch.size(); ++i) {
    const Matrix& x = ch.povm()[i];
    // sigma_A^(i) = Tr_B((I (x) X_i) rho_ab), unnormalized with trace p_i.
    Matrix sigma = Matrix::Zero(da, da);
    for (Index a = 0; a < da; ++a)
      for (Index ap = 0; ap < da; ++ap) {
        Complex acc(0.0, 0.0);
        for (Index b = 0; b < db; ++b)
          for (Index c = 0; c < db; ++c) acc += x(b, c) * rho(a * db + c, ap * db + b);
        sigma(a, ap) = acc;
      }
    const Matrix herm = (sigma + sigma.adjoint()) / 2.0;
    const Spectrum ssig = eig_psd(herm);
    const Spectrum sout = eig_psd(ch.outputs()[i].data());
    for (Index k = 0; k < ssig.eigenvalues.size(); ++k) {
      const double w = ssig.eigenvalues(k);
      if (w < tol::eig_drop) continue;
      for (Index l = 0; l < sout.eigenvalues.size(); ++l) {
        const double lambda = sout.eigenvalues(l);
        if (lambda < tol::eig_drop) continue;
        decomp.terms.push_back(ProductTerm{w * lambda,
                                           PureState(ssig.eigenvectors.col(k), Dims{da}),
                                           PureState(sout.eigenvectors.col(l), Dims{ch.d_out()})});
      }
    }
  }
  return decomp;
}

Channel random_channel(RandomChannelKind kind, Index d_in, Index d_out, int rank_or_terms,
                       std::uint64_t seed) {
  if (d_in < 1 || d_out < 1) throw BadParams("dimensions must be positive");
  if (rank_or_terms < 1) throw BadParams("rank/terms must be positive");
  Rng rng(seed);
  if (kind == RandomChannelKind::General) {
    const Index rank = rank_or_terms;
    if (d_out * rank < d_in)
      throw BadParams("d_out * rank must be at least d_in for an isometry to exist");
    const Matrix v = haar_isometry(rng, d_out * rank, d_in);
    std::vector<Matrix> ops;
    ops.reserve(rank);
    for (Index k = 0; k < rank; ++k) {
      Matrix a(d_out, d_in);
      for (Index o = 0; o < d_out; ++o)
        for (Index i = 0; i < d_in; ++i) a(o, i) = v(o * rank + k, i);
      ops.push_back(std::move(a));
    }
    return Channel(KrausChannel(std::move(ops)));
  }
  // EbHolevo
  const Index m = rank_or_terms;
  std::vector<Matrix> g(m);
  Matrix s = Matrix::Zero(d_in, d_in);
  for (Index i = 0; i < m; ++i) {
    const Matrix gi = ginibre(rng, d_in, d_in);
    g[i] = gi * gi.adjoint();
    s += g[i];
  }
  // S^{-1/2} via the spectral decomposition.
  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  Matrix s_inv_sqrt = Matrix::Zero(d_in, d_in);
  for (Index k = 0; k < d_in; ++k)
    s_inv_sqrt += (1.0 / std::sqrt(es.eigenvalues()(k))) * es.eigenvectors().col(k) *
                  es.eigenvectors().col(k).adjoint();
  std::vector<Matrix> povm(m);
  for (Index i = 0; i < m; ++i) {
    Matrix x = s_inv_sqrt * g[i] * s_inv_sqrt;
    povm[i] = (x + x.adjoint()) / 2.0;
  }
  std::vector<DensityMatrix> outputs;
  outputs.reserve(m);
  for (Index i = 0; i < m; ++i)
    outputs.push_back(DensityMatrix::unchecked(random_density_raw(rng, d_out, d_out), Dims{d_out}));
  return Channel(HolevoFormChannel(std::move(povm), std::move(outputs)));
}

}  // namespace ebchan
