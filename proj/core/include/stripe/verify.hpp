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

// Randomized self-check of the receiver identities on small instances.
//
// Each instance draws L in [1, 6], N in [1, 4], K in [1, 8], random
// correlation matrices, a pilot length below or at K (so pilots may be
// shared), one fading block, MMSE estimates and a few data columns.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stripe/channel.hpp"
#include "stripe/estimation.hpp"
#include "stripe/receivers.hpp"

namespace stripe {

struct VerifyInstance {
  std::uint64_t seed = 0;
  std::size_t L = 0, N = 0, K = 0;
  double sigma2 = 1.0;
  RVec powers;
  ChannelStatistics stats;
  PilotAssignment pilots;
  EstimationStatistics estimation;
  std::vector<APLocalData> aps;
};

// Deterministic in `instance_seed`. Instances built with force_single_ap
// have L = 1.
VerifyInstance make_verify_instance(std::uint64_t instance_seed, bool force_single_ap = false);

struct VerifyOptions {
  std::size_t instances = 200;
  std::uint64_t seed = 1;
  // Adds Hermitian noise of relative size 1e-3 to P after every OSLP step
  // of the run checked against the centralized receiver.
  bool perturb = false;
};

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  double worst_error = 0.0;
  std::size_t evaluated = 0;
  std::vector<std::uint64_t> failing_seeds;  // at most 16

  bool passed() const { return failing_seeds.empty() && evaluated > 0; }
};

struct VerificationReport {
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  bool perturbed = false;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult& check(const std::string& name) const;
};

// Check names: centralized_equivalence, ordering_invariance, monotonicity,
// mse_sinr_duality, incremental_sinr, alt_oslp_equivalence, smr_identity,
// covariance_identities, block_inverse_identity.
VerificationReport verify(const VerifyOptions& options = {});

// Seed of instance i of a run seeded with `seed`.
std::uint64_t verify_instance_seed(std::uint64_t seed, std::size_t i);

}  // namespace stripe
