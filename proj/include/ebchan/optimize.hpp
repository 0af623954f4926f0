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
#include <variant>
#include <vector>

#include "ebchan/channels.hpp"
#include "ebchan/qmath.hpp"
#include "ebchan/types.hpp"

namespace ebchan {

/// Probability distribution over pure states. Doubles as the pure-state
/// decomposition returned by the entanglement-of-formation search.
struct Ensemble {
  std::vector<double> probs;
  std::vector<PureState> states;
};

/// Throws unless probs sum to 1 within 1e-10, lists match in length, every
/// state has dimension d and the ensemble has at most d^2 members.
void validate_ensemble(const Ensemble& ens, Index d);

struct OptimizerConfig {
  int restarts = 32;
  int max_iters = 2000;
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

/// Which side of the true optimum the reported value is on. Searches over
/// feasible points can only certify one direction: minimizations report
/// upper bounds, maximizations lower bounds.
enum class BoundDirection { Lower, Upper };

struct OptResult {
  double value = 0.0;
  BoundDirection bound_direction = BoundDirection::Upper;
  std::variant<std::monostate, Ensemble, PureState> argument;
  int iterations = 0;
  bool converged = false;
  std::vector<double> per_restart;  // best value found by each restart, in index order
  std::uint64_t seed = 0;
};

/// Spread of the best three restart values; used by the additivity reports
/// to estimate one-sided optimizer error.
double top3_spread(const std::vector<double>& per_restart);

/// chi of a fixed ensemble: H(sum_i p_i ch(rho_i)) - sum_i p_i H(ch(rho_i)),
/// in bits.
double holevo_chi(const Channel& ch, const Ensemble& ens);

/// Minimize H(ch(|psi><psi|)) over pure inputs. Multi-restart random tangent
/// search on the unit sphere; the result is an upper bound on the true
/// minimum output entropy.
OptResult min_output_entropy(const Channel& ch, const OptimizerConfig& cfg);

/// Maximize holevo_chi over ensembles of at most d_in^2 pure states,
/// alternating an exact multiplicative probability update (the inner problem
/// is concave) with local search over the state vectors. Lower bound on the
/// true chi*.
OptResult chi_star(const Channel& ch, const OptimizerConfig& cfg);

/// Minimize sum_i p_i H(Tr_A rho_i) over pure-state decompositions of
/// rho_ab, parameterized by isometric mixings of the eigendecomposition with
/// at most rank^2 members. Upper bound on the true E_F.
OptResult entanglement_of_formation(const DensityMatrix& rho_ab, const OptimizerConfig& cfg);

/// Exact E_F of a two-qubit state via the concurrence closed form. Oracle
/// for the variational search.
double eof_wootters_2x2(const DensityMatrix& rho_ab);

/// Maximize E_F((I (x) phi)(|psi><psi|)) over pure bipartite inputs with
/// reference dimension d_a (pure inputs suffice since E_F is convex). Lower
/// bound on the true maximum. Uses the Wootters closed form when the output
/// is two qubits and the variational search otherwise.
OptResult max_output_eof(const Channel& phi, Index d_a, const OptimizerConfig& cfg);

}  // namespace ebchan
