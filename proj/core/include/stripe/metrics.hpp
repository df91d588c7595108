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

// SINR, MSE and spectral efficiency of linear combiners.
//
// G is the stacked channel estimate (NL x K) with columns h_k, K_L the
// block-diagonal colored noise covariance and Lambda = K_L + G Q G^H.
// Combiners are passed as b_k (NL-vectors) or as the K x NL matrix whose
// row k is b_k^H.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stripe/receivers.hpp"
#include "stripe/types.hpp"

namespace stripe {

// p_k |b^H h_k|^2 / (sum_{i != k} p_i |b^H h_i|^2 + b^H K_L b).
// Throws DomainError when b = 0.
double instantaneous_sinr(const CVec& b, std::size_t k, const CMat& G, const CMat& K_L, const RVec& powers);

// instantaneous_sinr() for every row of `combiner` (K x NL, row k = b_k^H).
RVec combiner_sinr(const CMat& combiner, const CMat& G, const CMat& K_L, const RVec& powers);

// p_k h_k^H (sum_{i != k} p_i h_i h_i^H + K_L)^{-1} h_k.
double max_sinr(std::size_t k, const CMat& G, const CMat& K_L, const RVec& powers);
RVec max_sinr_all(const CMat& G, const CMat& K_L, const RVec& powers);

// K_L + G Q G^H.
CMat lambda_matrix(const CMat& G, const CMat& K_L, const RVec& powers);

// (1 - tau_p / tau_c) mean(log2(1 + gamma)). Throws UsageError on an empty
// sample set and DomainError when tau_p > tau_c.
double achievable_se(std::span<const double> gamma_samples, std::size_t tau_p, std::size_t tau_c);
double se_prelog(std::size_t tau_p, std::size_t tau_c);

// p - 2 Re{b^H h_k} p + b^H Lambda b.
double mse_of_combiner(const CVec& b, const CVec& h_k, const CMat& lambda, double p_k);
// Row-wise version over a K x NL combiner matrix.
RVec combiner_mse(const CMat& combiner, const CMat& G, const CMat& lambda, const RVec& powers);

// p - p^2 h_k^H Lambda^{-1} h_k.
double min_mse(const CVec& h_k, const CMat& lambda, double p_k);

// Incremental quantities of UE k when AP l joins an OSLP chain.
struct SinrIncrement {
  double alpha = 0.0;  // [T_l H_l P_{l-1}]_kk
  double mse = 0.0;    // e_kl
  double gamma = 0.0;  // SINR increment
  double sinr = 0.0;   // Gamma_kl
  double zeta = 0.0;   // log2(1 + gamma / (1 + Gamma_{k(l-1)}))
  double rate = 0.0;   // log2(1 + Gamma_kl), accumulated through zeta
};

// One update from the previous step of UE k. Throws NumericError when
// p_k - alpha (Gamma_prev + 1) <= 0.
SinrIncrement sinr_increment(const CMat& T, const CMat& H, const CMat& P_prev, std::size_t k, double p_k,
                        const SinrIncrement& previous);

// State before the first AP: alpha = 0, e = p_k, Gamma = 0, rate = 0.
SinrIncrement sinr_increment_initial(double p_k);

// OSLP over `aps` with the incremental quantities of every UE after every
// AP: result[l][k]. The final P_L is returned through `final_error_cov`
// when non-null.
std::vector<std::vector<SinrIncrement>> oslp_trace(std::span<const APLocalData> aps, const RVec& powers,
                                               CMat* final_error_cov = nullptr);

// Per-UE metrics of one receiver on one coherence block.
struct MetricsRecord {
  RVec sinr;  // Gamma'_k
  RVec mse;   // e'_k
};

// Evaluates the effective combiner of `output` against the estimates and
// noise statistics of `aps`.
MetricsRecord evaluate_receiver(const ReceiverOutput& output, std::span<const APLocalData> aps, const RVec& powers);

}  // namespace stripe
