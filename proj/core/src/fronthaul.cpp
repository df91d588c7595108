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

#include "stripe/fronthaul.hpp"

#include "stripe/types.hpp"

namespace stripe {
namespace {

std::uint64_t centralized_total(const FronthaulParams& p) { return 2 * p.tau_c * p.N * p.L; }

}  // namespace

FronthaulRow fronthaul_count(Algorithm algorithm, const FronthaulParams& p) {
  if (p.tau_p > p.tau_c) throw DomainError("pilot length must not exceed the coherence block");
  const std::uint64_t seq_data = 2 * p.K * (p.tau_c - p.tau_p);
  FronthaulRow row;
  row.algorithm = algorithm;
  switch (algorithm) {
    case Algorithm::kCentralized:
      row.data_reals = centralized_total(p);
      row.stats_reals = 0;
      break;
    case Algorithm::kOslp:
    case Algorithm::kAltOslp:
    case Algorithm::kRls:
      row.data_reals = seq_data;
      row.stats_reals = p.K * p.K;
      break;
    case Algorithm::kNLmmse:
      row.data_reals = seq_data;
      row.stats_reals = 2 * p.K * p.K + p.K;
      break;
    case Algorithm::kSequentialMr:
      row.data_reals = seq_data;
      row.stats_reals = p.K;
      break;
    default:
      throw UsageError("unknown algorithm");
  }
  row.total_per_link = row.data_reals + row.stats_reals;
  row.total_network = algorithm == Algorithm::kCentralized ? row.total_per_link : row.total_per_link * p.L;
  const std::uint64_t cent = centralized_total(p);
  row.savings_vs_centralized =
      cent == 0 ? 0.0 : 1.0 - static_cast<double>(row.total_per_link) / static_cast<double>(cent);
  return row;
}

double savings_vs_centralized(const FronthaulParams& params) {
  if (params.K == 0) return 1.0;
  return fronthaul_count(Algorithm::kOslp, params).savings_vs_centralized;
}

FronthaulReport fronthaul_report(const FronthaulParams& params, const std::vector<Algorithm>& algorithms) {
  FronthaulReport report;
  report.params = params;
  for (Algorithm a : algorithms) report.rows.push_back(fronthaul_count(a, params));
  return report;
}

Latency latency_blocks(std::uint64_t t_u, std::uint64_t L) {
  if (t_u == 0 || L == 0) throw DomainError("latency needs t_u >= 1 and L >= 1");
  return {t_u + L, t_u * L};
}

}  // namespace stripe
