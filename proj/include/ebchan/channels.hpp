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

#include <cstdint>
#include <optional>
#include <vector>

#include "ebchan/qmath.hpp"
#include "ebchan/rng.hpp"
#include "ebchan/types.hpp"

namespace ebchan {

/// CPT map as a list of d_out x d_in Kraus operators. Construction checks
/// shape consistency only; trace preservation and complete positivity are
/// diagnosed by validate_cpt so that malformed channels can be inspected.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> ops);

  Index d_in() const { return d_in_; }
  Index d_out() const { return d_out_; }
  const std::vector<Matrix>& ops() const { return ops_; }

 private:
  std::vector<Matrix> ops_;
  Index d_in_ = 0;
  Index d_out_ = 0;
};

/// Entanglement-breaking channel in Holevo form: rho -> sum_i Tr(X_i rho) theta_i
/// with {X_i} a POVM and {theta_i} states. Construction validates the POVM
/// (PSD elements summing to the identity) and the output states.
class HolevoFormChannel {
 public:
  HolevoFormChannel(std::vector<Matrix> povm, std::vector<DensityMatrix> outputs);

  Index d_in() const { return d_in_; }
  Index d_out() const { return d_out_; }
  Index size() const { return static_cast<Index>(povm_.size()); }
  const std::vector<Matrix>& povm() const { return povm_; }
  const std::vector<DensityMatrix>& outputs() const { return outputs_; }

 private:
  std::vector<Matrix> povm_;
  std::vector<DensityMatrix> outputs_;
  Index d_in_ = 0;
  Index d_out_ = 0;
};

/// Convex combination of pure product states sum_j q_j |a_j><a_j| (x) |b_j><b_j|.
struct ProductTerm {
  double weight;
  PureState a;
  PureState b;
};

struct ProductDecomposition {
  std::vector<ProductTerm> terms;

  double total_weight() const;
  Matrix reconstruct() const;
};

/// A channel in whichever representation it was supplied in. A Kraus form is
/// always available (converted from the Holevo form on construction);
/// the Holevo form is retained when present since the additivity harnesses
/// need the explicit POVM.
class Channel {
 public:
  explicit Channel(KrausChannel kraus);
  explicit Channel(HolevoFormChannel holevo);

  Index d_in() const { return kraus_.d_in(); }
  Index d_out() const { return kraus_.d_out(); }
  const KrausChannel& kraus() const { return kraus_; }
  bool has_holevo() const { return holevo_.has_value(); }
  const HolevoFormChannel& holevo() const;

 private:
  KrausChannel kraus_;
  std::optional<HolevoFormChannel> holevo_;
};

struct CptDiagnostics {
  double tp_residual;    // || sum A^dag A - I ||_F
  double choi_min_eig;   // smallest eigenvalue of the normalized Choi matrix
  double tol;
  bool pass;
};

enum class EbVerdict { EB_certified, NOT_EB_certified, UNKNOWN };

struct EbCertificate {
  EbVerdict verdict;
  double pt_min_eigenvalue;  // smallest eigenvalue of the partially transposed Choi
};

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);
DensityMatrix apply(const Channel& ch, const DensityMatrix& rho);
DensityMatrix holevo_apply(const HolevoFormChannel& ch, const DensityMatrix& rho);

KrausChannel holevo_to_kraus(const HolevoFormChannel& ch);

/// Normalized Choi state (I (x) ch) |Omega><Omega| on dims [d_in, d_out],
/// with |Omega> the maximally entangled state scaled to unit norm. Trace
/// preservation reads Tr_out(choi) = I / d_in.
DensityMatrix choi_matrix(const KrausChannel& ch);

CptDiagnostics validate_cpt(const KrausChannel& ch, double tol = tol::trace);

/// Kraus set {A_j (x) B_k}.
KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b);
Channel tensor_channels(const Channel& a, const Channel& b);

Channel make_identity(Index d);
/// rho -> (1-p) rho + p I/d, via the Weyl (generalized Pauli) Kraus set.
Channel make_depolarizing(double p, Index d);
/// c-q channel: X_i = |e_i><e_i| for the supplied orthonormal basis.
Channel make_cq(const std::vector<Vector>& basis, std::vector<DensityMatrix> outputs);
/// q-c channel: theta_i = |i><i| with output dimension = number of POVM elements.
Channel make_qc(std::vector<Matrix> povm);

/// PPT test on the Choi matrix. Certifies NOT_EB when an NPT eigenvalue is
/// found; certifies EB when PPT holds and d_in * d_out <= 6 (where PPT is
/// exact); reports UNKNOWN when PPT holds in larger dimensions.
EbCertificate is_entanglement_breaking(const KrausChannel& ch);

/// The separable decomposition of (I (x) ch)(rho_ab) available for any
/// Holevo-form channel: eigendecompose each conditional state
/// Tr_B((I (x) X_i) rho_ab) and each theta_i, and emit all cross terms.
ProductDecomposition separable_output_decomposition(const HolevoFormChannel& ch,
                                                    const DensityMatrix& rho_ab);

enum class RandomChannelKind { General, EbHolevo };

/// General: Stinespring truncation of a Haar-random isometry with the given
/// Kraus rank. EbHolevo: random POVM X_i = S^{-1/2} G_i S^{-1/2} with
/// G_i = M_i M_i^dag, S = sum_i G_i, plus random full-rank output states.
/// Deterministic given the seed.
Channel random_channel(RandomChannelKind kind, Index d_in, Index d_out, int rank_or_terms,
                       std::uint64_t seed);

namespace detail {

/// Channel action on an arbitrary operator (no density-matrix validation).
Matrix apply_raw(const KrausChannel& ch, const Matrix& m);
Matrix apply_raw(const HolevoFormChannel& ch, const Matrix& m);
Matrix apply_raw(const Channel& ch, const Matrix& m);

}  // namespace detail

}  // namespace ebchan
