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

// Campaign output files.
//
// `<name>.csv` per algorithm, header `drop,ue,se_bps_hz,mse`, values in
// shortest round-trip form. `summary.json`:
//
//   {
//     "schema": "stripe-summary/1",
//     "config": {...SimConfig keys...},
//     "algorithms": {"oslp": {"se": Summary, "mse": Summary, "csv": "oslp.csv"}, ...},
//     "fronthaul": {"params": {...}, "rows": [{"algorithm", "data_reals",
//                   "stats_reals", "total_per_link", "total_network",
//                   "savings_vs_centralized"}],
//                   "latency": {"t_u", "pipelined", "naive"}},
//     "provenance": {"config_hash", "seed", "version"}
//   }
//
// with Summary = {"n", "mean", "stderr", "ci95_halfwidth", "median", "p05", "p95"}.

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "stripe/campaign.hpp"

namespace stripe {

std::string csv_file_name(Algorithm algorithm);

std::string to_csv(const std::vector<UeSample>& samples);
std::vector<UeSample> parse_csv(const std::string& text);

std::string summary_json(const CampaignResult& result);

struct SummaryEntry {
  Summary se;
  Summary mse;
};
// Per-algorithm summaries read back from summary_json() output.
std::map<std::string, SummaryEntry> parse_summary_json(const std::string& text);

// Creates `dir` if needed and writes every CSV plus summary.json.
void write_results(const std::filesystem::path& dir, const CampaignResult& result);

std::vector<UeSample> read_csv_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace stripe
