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

// Simulation configuration, presets and the flat key-value config format.
//
// A config file is a list of `key = value` lines. `#` starts a comment,
// string values may be quoted, list values are comma separated:
//
//   L = 24
//   N = 4
//   K = 10
//   ue_power_mW = 50
//   algorithms = "oslp,cent,nlmmse,smr"
//
// Keys that are not given keep the value of the base configuration (the
// defaults or a preset). `tau_p` defaults to min(K, 20) when absent.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stripe/types.hpp"

namespace stripe {

enum class Algorithm { kCentralized, kOslp, kAltOslp, kNLmmse, kSequentialMr, kRls };

// Short CLI/file names: "cent", "oslp", "altoslp", "nlmmse", "smr", "rls".
std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> parse_algorithm_list(std::string_view csv);
std::string format_algorithm_list(const std::vector<Algorithm>& algos);

enum class PilotScheme { kGreedy, kRoundRobin };
enum class CorrelationModel { kLocalScattering, kGaussianApprox };

std::string_view pilot_scheme_name(PilotScheme s);
std::string_view correlation_model_name(CorrelationModel m);

struct SimConfig {
  std::size_t L = 24;  // access points on the stripe
  std::size_t N = 4;   // antennas per AP
  std::size_t K = 10;  // single-antenna UEs
  std::size_t tau_c = 2000;
  std::size_t tau_p = 10;

  double ue_power_mW = 50.0;
  double noise_power_dBm = -92.0;
  double bandwidth_Hz = 100e6;  // metadata only; SE is per Hz

  double area_side_m = 125.0;
  double stripe_length_m = 500.0;
  double ue_box_side_m = 100.0;
  double ap_ue_height_diff_m = 5.0;
  double asd_deg = 15.0;

  std::uint64_t rng_seed = 1;
  std::size_t n_drops = 100;
  std::size_t n_fades = 20;

  PilotScheme pilots = PilotScheme::kGreedy;
  CorrelationModel correlation = CorrelationModel::kLocalScattering;
  std::vector<Algorithm> algorithms = {Algorithm::kOslp, Algorithm::kCentralized,
                                       Algorithm::kNLmmse, Algorithm::kSequentialMr};
  // Regularization of the RLS baseline; unset means default_rls_delta().
  std::optional<double> rls_delta;
};

// Throws ConfigError naming the first violated field.
void validate(const SimConfig& config);

double dbm_to_mw(double dbm);
double noise_power_mw(const SimConfig& config);
// p_k for every UE, in mW.
RVec ue_powers(const SimConfig& config);

std::size_t default_tau_p(std::size_t K);

// "paper-fig3" .. "paper-fig6". Throws ConfigError("preset", ...) otherwise.
SimConfig preset(std::string_view name);
std::vector<std::string> preset_names();

// Applies the assignments in `text` on top of `base`.
SimConfig parse_config(std::string_view text, const SimConfig& base = {});
SimConfig load_config_file(const std::string& path, const SimConfig& base = {});

// Canonical, sorted `key = value` serialization; parse_config() reads it back.
std::string to_config_text(const SimConfig& config);
// FNV-1a over to_config_text().
std::uint64_t config_hash(const SimConfig& config);

}  // namespace stripe
