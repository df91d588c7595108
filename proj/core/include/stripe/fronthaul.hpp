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

// Fronthaul load per coherence block, in real symbols, and pipeline latency.
//
//   algorithm      data             statistics
//   centralized    2 tau_c N L      0
//   OSLP           2K(tau_c-tau_p)  K^2
//   N-LMMSE        2K(tau_c-tau_p)  2K^2 + K
//   sequential MR  2K(tau_c-tau_p)  K
//   RLS            2K(tau_c-tau_p)  K^2
//
// Centralized numbers are the load on the last link into the CPU; the
// sequential ones hold on every link.

#pragma once

#include <cstdint>
#include <vector>

#include "stripe/config.hpp"

namespace stripe {

struct FronthaulParams {
  std::uint64_t K = 0;
  std::uint64_t tau_c = 0;
  std::uint64_t tau_p = 0;
  std::uint64_t N = 0;
  std::uint64_t L = 0;
};

struct FronthaulRow {
  Algorithm algorithm = Algorithm::kOslp;
  std::uint64_t data_reals = 0;
  std::uint64_t stats_reals = 0;
  std::uint64_t total_per_link = 0;
  // Summed over the L links of the stripe (centralized: the last-link load).
  std::uint64_t total_network = 0;
  double savings_vs_centralized = 0.0;
};

// Throws DomainError when tau_p > tau_c.
FronthaulRow fronthaul_count(Algorithm algorithm, const FronthaulParams& params);

// 1 - (OSLP per-link total) / (centralized total). 1 when K = 0; negative
// when OSLP needs more than centralized.
double savings_vs_centralized(const FronthaulParams& params);

struct FronthaulReport {
  FronthaulParams params;
  std::vector<FronthaulRow> rows;
};

FronthaulReport fronthaul_report(const FronthaulParams& params, const std::vector<Algorithm>& algorithms);

struct Latency {
  std::uint64_t pipelined = 0;  // t_u + L
  std::uint64_t naive = 0;      // t_u L
};

// Throws DomainError when t_u or L is zero.
Latency latency_blocks(std::uint64_t t_u, std::uint64_t L);

}  // namespace stripe
