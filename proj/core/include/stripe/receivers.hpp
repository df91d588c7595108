// Copyright 2026 The stripe Authors.
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

// Uplink combiners for a sequential (radio stripe) fronthaul.
//
// Every AP l holds its channel estimate H_l (N x K), the covariance
// Sigma_l of its colored noise w_l = H_tilde_l s + n_l, and the samples
// y_l = H_l s + w_l it received during the data phase, one column per
// channel use. Sequential algorithms have the form
//
//   s_l = A_l s_{l-1} + B_l y_l,   s_0 = 0,
//
// which unrolls to s_L = Bbar_L z_L over the stacked z_L = [y_1; ...; y_L].
// Each receiver reports the K x (N L) matrix Bbar_L ("effective combiner")
// so SINR and MSE can be evaluated from closed forms.
//
// The matrices A_l, B_l only depend on channel estimates and statistics, so
// every receiver is built once per coherence block and applied to all data
// columns at once.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stripe/config.hpp"
#include "stripe/types.hpp"

namespace stripe {

struct APLocalData {
  CMat channel_estimate;  // N x K
  CMat noise_cov;         // N x N, Hermitian PD
  CMat received;          // N x T data samples; T may be 0

  Eigen::Index antennas() const { return channel_estimate.rows(); }
  Eigen::Index users() const { return channel_estimate.cols(); }
};

// Running state handed from AP l to AP l+1.
struct SequentialState {
  CMat estimate;   // K x T, s_l
  CMat error_cov;  // K x K, P_l
  CMat gram;       // K x K, M_l = sum H^H Sigma^{-1} H (alternative OSLP)
  CMat weighted_mr;  // K x T, s~_l = sum H^H Sigma^{-1} y (alternative OSLP)
  CMat combiner;   // K x (N l), Bbar_l; empty when not tracked
  bool track_combiner = true;
  std::size_t aps_processed = 0;
};

// s = 0, P = Q = diag(powers), M = 0, s~ = 0, empty combiner.
SequentialState initial_state(const RVec& powers, Eigen::Index data_columns, bool track_combiner = true);

struct ReceiverOutput {
  Algorithm algorithm = Algorithm::kOslp;
  CMat estimate;                   // K x T
  std::optional<CMat> error_cov;   // K x K, when the algorithm defines one
  std::optional<CMat> combiner;    // K x (N L), when tracked
};

// Stacked views over the AP list.
CMat stack_channel_estimates(std::span<const APLocalData> aps);  // G_L, NL x K
CMat stack_noise_covariance(std::span<const APLocalData> aps);   // K_L, NL x NL block diagonal
CMat stack_received(std::span<const APLocalData> aps);           // z_L, NL x T

// Centralized LMMSE: V = Q G^H Lambda^{-1}, Lambda = K_L + G Q G^H,
// s = V z, P = Q - V G Q.
ReceiverOutput centralized_lmmse(const CMat& G, const CMat& K_L, const RVec& powers, const CMat& z);
ReceiverOutput centralized_lmmse(std::span<const APLocalData> aps, const RVec& powers);

// T_l = P_{l-1} H_l^H (Sigma_l + H_l P_{l-1} H_l^H)^{-1}.
CMat oslp_gain(const CMat& error_cov, const APLocalData& ap);

// One OSLP update at AP l:
//   s_l = s_{l-1} + T_l (y_l - H_l s_{l-1}),  P_l = (I - T_l H_l) P_{l-1},
//   Bbar_l = [Bbar_{l-1} - T_l H_l Bbar_{l-1}, T_l].
// P_l is re-Hermitized after the update.
SequentialState oslp_step(const SequentialState& state, const APLocalData& ap);

// Folds oslp_step over the APs in the given order.
ReceiverOutput oslp_run(std::span<const APLocalData> aps, const RVec& powers, bool track_combiner = true);

// One step of the semi-distributed form: M_l = M_{l-1} + H^H Sigma^{-1} H,
// s~_l = s~_{l-1} + H^H Sigma^{-1} y_l.
SequentialState alt_oslp_step(const SequentialState& state, const APLocalData& ap);

// Accumulates M_L and s~_L along the stripe, then s = (Q^{-1} + M_L)^{-1} s~_L.
// Requires every power to be positive.
ReceiverOutput alt_oslp_run(std::span<const APLocalData> aps, const RVec& powers, bool track_combiner = true);

// A_l = I, B_l = H_l^H.
ReceiverOutput sequential_mr(std::span<const APLocalData> aps, bool track_combiner = true);

// Per-UE normalized LMMSE chain. At AP l, UE k sees its previous scalar
// estimate as one extra "antenna" with effective channel v^H H' and noise
// variance v^H Sigma' v, and recomputes an LMMSE vector over
// [s_{k,l-1}; y_l]. The effective combiner is always tracked.
ReceiverOutput n_lmmse_run(std::span<const APLocalData> aps, const RVec& powers);

// Recursive regularized least squares: the OSLP recursion with
// P_0 = delta^{-1} I and Sigma_l = noise_power I, which computes
// (delta noise_power I + G^H G)^{-1} G^H z. Channel statistics are ignored.
ReceiverOutput rls_run(std::span<const APLocalData> aps, double delta, double noise_power,
                       bool track_combiner = true);

// 1e-4 / min_k p_k.
double default_rls_delta(const RVec& powers);

// Bbar_L. Throws UsageError when the receiver did not track it.
const CMat& effective_combiner(const ReceiverOutput& output);

struct ReceiverOptions {
  double noise_power = 1.0;           // sigma^2, used by RLS
  std::optional<double> rls_delta;    // default_rls_delta() when unset
  bool track_combiner = true;
};

ReceiverOutput run_receiver(Algorithm algorithm, std::span<const APLocalData> aps, const RVec& powers,
                            const ReceiverOptions& options = {});

}  // namespace stripe
