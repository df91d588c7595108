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

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "stripe/channel.hpp"
#include "stripe/receivers.hpp"
#include "stripe/rng.hpp"

namespace {

using namespace stripe;

struct Network {
  std::vector<APLocalData> aps;
  RVec powers;
};

Network make_network(std::size_t L, std::size_t N, std::size_t K) {
  Rng rng = make_stream(7, StreamTag::kFading, {L, N, K});
  Network net;
  net.powers = RVec::Ones(static_cast<Eigen::Index>(K));
  const auto n = static_cast<Eigen::Index>(N);
  for (std::size_t l = 0; l < L; ++l) {
    APLocalData ap;
    ap.channel_estimate = complex_normal(rng, n, static_cast<Eigen::Index>(K));
    const CMat A = complex_normal(rng, n, n);
    ap.noise_cov = A * A.adjoint() / static_cast<double>(N) + CMat::Identity(n, n);
    ap.received = complex_normal(rng, n, 64);
    net.aps.push_back(std::move(ap));
  }
  return net;
}

void BM_Oslp(benchmark::State& state) {
  const auto net = make_network(static_cast<std::size_t>(state.range(0)), 4, 10);
  for (auto _ : state) benchmark::DoNotOptimize(oslp_run(net.aps, net.powers, false));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Oslp)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oN);

void BM_Centralized(benchmark::State& state) {
  const auto net = make_network(static_cast<std::size_t>(state.range(0)), 4, 10);
  for (auto _ : state) benchmark::DoNotOptimize(centralized_lmmse(net.aps, net.powers));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Centralized)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_NLmmse(benchmark::State& state) {
  const auto net = make_network(24, 4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(n_lmmse_run(net.aps, net.powers));
}
BENCHMARK(BM_NLmmse)->Arg(10)->Arg(24);

void BM_LocalScattering(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_scattering_correlation(N, 0.4, 15 * std::numbers::pi / 180, 1.0));
  }
}
BENCHMARK(BM_LocalScattering)->Arg(1)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
