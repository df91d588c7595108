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

// Monte-Carlo campaign over UE drops and fading blocks.
//
// Drop d uses the streams (seed, geometry, d); fade f of drop d uses
// (seed, fading, d, f) and (seed, pilot noise, d, f). Drops are distributed
// over worker threads and written back by index, so the result does not
// depend on the thread count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stripe/config.hpp"
#include "stripe/fronthaul.hpp"

namespace stripe {

struct UeSample {
  std::size_t drop = 0;
  std::size_t ue = 0;
  double se = 0.0;   // bit/s/Hz, prelog included
  double mse = 0.0;  // mean over fades
};

struct Summary {
  std::size_t n = 0;
  double mean = 0.0;
  double stderr_mean = 0.0;
  double median = 0.0;
  double p05 = 0.0;
  double p95 = 0.0;
};

struct AlgorithmResult {
  Algorithm algorithm = Algorithm::kOslp;
  std::vector<UeSample> samples;  // drop-major, K per drop
  Summary se;
  Summary mse;
};

struct Provenance {
  std::string config_hash;  // 16 hex digits
  std::uint64_t seed = 0;
  std::string version;
  std::string config_text;
};

struct CampaignResult {
  SimConfig config;
  std::vector<AlgorithmResult> algorithms;
  FronthaulReport fronthaul;
  Provenance provenance;

  const AlgorithmResult& at(Algorithm a) const;
};

// threads = 0 picks std::thread::hardware_concurrency().
CampaignResult run_campaign(const SimConfig& config, std::size_t threads = 0);

// Sorted (value, i / n) pairs. Throws UsageError on empty input.
std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples);

// Smallest sample x_(i) with i / n >= q, for q in [0, 1].
double quantile(std::vector<double> samples, double q);

Summary summarize(const std::vector<double>& samples);

Provenance make_provenance(const SimConfig& config);
std::string library_version();

}  // namespace stripe
