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

// Pilot assignment and MMSE channel estimation under pilot contamination.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stripe/channel.hpp"
#include "stripe/config.hpp"
#include "stripe/rng.hpp"
#include "stripe/types.hpp"

namespace stripe {

// Pilots are 0-based: pilot[k] in [0, tau_p).
struct PilotAssignment {
  std::size_t tau_p = 0;
  std::vector<std::size_t> pilot;

  std::size_t num_ues() const { return pilot.size(); }
  // S_k: all UEs sharing UE k's pilot, ascending, k included.
  std::vector<std::size_t> co_pilot_set(std::size_t k) const;
  // UEs on pilot t, ascending.
  std::vector<std::size_t> users_on_pilot(std::size_t t) const;
};

// Greedy: the first tau_p UEs get distinct pilots; the rest, strongest
// first (by max_l beta_kl), take the pilot whose current users have the
// least summed beta at the newcomer's strongest AP. Round robin: k mod tau_p.
// `beta` is K x L.
PilotAssignment assign_pilots(std::size_t K, std::size_t tau_p, const RMat& beta,
                              PilotScheme scheme = PilotScheme::kGreedy);

// Despread pilot observations, one N x tau_p matrix per AP whose column t is
//   y_tl = sum_{i on pilot t} sqrt(p_i tau_p) h_il + n_tl,  n_tl ~ CN(0, sigma2 I).
std::vector<CMat> despreaded_observation(const ChannelRealization& channels, const PilotAssignment& assignment,
                                         const RVec& powers, double sigma2, Rng& rng);

// tau_p x tau_p DFT pilot book; column t is phi_t with ||phi_t||^2 = tau_p.
CMat pilot_book(std::size_t tau_p);

// Full received pilot block Y_l = sum_i sqrt(p_i) h_il phi_{t_i}^T + N_l
// (N x tau_p). Slower than despreaded_observation(); kept for equivalence
// testing of the despread shortcut.
CMat received_pilot_signal(const CMat& H_l, const PilotAssignment& assignment, const RVec& powers, double sigma2,
                           Rng& rng);

// Y_l conj(Phi) / sqrt(tau_p): column t is y_tl.
CMat despread(const CMat& Y_l, std::size_t tau_p);

struct MmseEstimate {
  CVec h_hat;
  CMat R_hat;
  CMat R_tilde;
};

// MMSE estimates of every co-pilot UE's channel from one despread
// observation y (N-vector):
//   Psi = sum_i tau_p p_i R_i + sigma2 I,
//   h_hat_i = sqrt(p_i tau_p) R_i Psi^{-1} y,
//   R_hat_i = p_i tau_p R_i Psi^{-1} R_i,  R_tilde_i = R_i - R_hat_i.
// Throws NumericError if Psi is singular.
std::vector<MmseEstimate> mmse_estimate(const CVec& y, std::span<const CMat> co_pilot_R,
                                        std::span<const double> co_pilot_powers, std::size_t tau_p, double sigma2);

// Sigma_l = sum_i p_i R_tilde_il + sigma2 I.
CMat colored_noise_cov(std::span<const CMat> R_tilde_at_ap, const RVec& powers, double sigma2);

// Everything about the estimator that does not depend on the fading
// realization; computed once per UE drop.
struct EstimationStatistics {
  std::size_t K = 0, L = 0, N = 0, tau_p = 0;
  std::vector<CMat> gain;     // K * L: sqrt(p_k tau_p) R_kl Psi_{t_k l}^{-1}
  std::vector<CMat> R_hat;    // K * L
  std::vector<CMat> R_tilde;  // K * L
  std::vector<CMat> Sigma;    // L
  std::vector<CMat> Psi;      // tau_p * L, index t * L + l

  const CMat& gain_at(std::size_t k, std::size_t l) const { return gain[k * L + l]; }
  const CMat& R_hat_at(std::size_t k, std::size_t l) const { return R_hat[k * L + l]; }
  const CMat& R_tilde_at(std::size_t k, std::size_t l) const { return R_tilde[k * L + l]; }
  const CMat& Psi_at(std::size_t t, std::size_t l) const { return Psi[t * L + l]; }
};

EstimationStatistics estimation_statistics(const ChannelStatistics& stats, const PilotAssignment& assignment,
                                           const RVec& powers, double sigma2);

// H_hat_l (N x K) for every AP from the despread observations.
std::vector<CMat> estimate_channels(const EstimationStatistics& est, const PilotAssignment& assignment,
                                    std::span<const CMat> y_pilot);

struct EstimationResult {
  EstimationStatistics statistics;
  std::vector<CMat> y_pilot;  // per AP, N x tau_p
  std::vector<CMat> H_hat;    // per AP, N x K
};

// One-shot pipeline: statistics, pilot observation and estimates.
EstimationResult estimate(const ChannelStatistics& stats, const ChannelRealization& channels,
                          const PilotAssignment& assignment, const RVec& powers, double sigma2, Rng& rng);

}  // namespace stripe
