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

#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "stripe/receivers.hpp"

namespace fixture {

struct Network {
  std::vector<stripe::APLocalData> aps;
  stripe::RVec powers;
};

// Random estimates, PD noise covariances and data, independent of the
// library's own estimation pipeline.
inline Network random_network(std::uint64_t seed, int L, int N, int K, int T = 2) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  Network net;
  net.powers.resize(K);
  for (int k = 0; k < K; ++k) net.powers(k) = u(rng);
  for (int l = 0; l < L; ++l) {
    stripe::APLocalData ap;
    ap.channel_estimate = oracle::random_complex(rng, N, K);
    ap.noise_cov = oracle::random_pd(rng, N, 0.1, 1.0);
    ap.received = oracle::random_complex(rng, N, T);
    net.aps.push_back(std::move(ap));
  }
  return net;
}

inline double rel(const stripe::CMat& a, const stripe::CMat& b) { return (a - b).norm() / b.norm(); }

}  // namespace fixture
