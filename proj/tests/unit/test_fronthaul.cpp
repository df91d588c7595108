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

#include "doctest.h"
#include "stripe/fronthaul.hpp"
#include "stripe/types.hpp"

using namespace stripe;

TEST_SUITE("fronthaul_latency") {
  TEST_CASE("table rows as exact integers") {
    const FronthaulParams p{20, 2000, 20, 4, 24};
    CHECK(fronthaul_count(Algorithm::kCentralized, p).total_per_link == 384000u);
    CHECK(fronthaul_count(Algorithm::kCentralized, p).stats_reals == 0u);
    const auto oslp = fronthaul_count(Algorithm::kOslp, p);
    CHECK(oslp.data_reals == 79200u);
    CHECK(oslp.stats_reals == 400u);
    CHECK(oslp.total_per_link == 79600u);
    CHECK(oslp.total_network == 79600u * 24u);
    CHECK(fronthaul_count(Algorithm::kSequentialMr, p).stats_reals == 20u);
    CHECK(fronthaul_count(Algorithm::kRls, p).stats_reals == 400u);
    CHECK(fronthaul_count(Algorithm::kNLmmse, FronthaulParams{10, 2000, 10, 4, 24}).stats_reals == 210u);
    CHECK(fronthaul_count(Algorithm::kAltOslp, p).total_per_link == oslp.total_per_link);
  }

  TEST_CASE("savings at the large-network setting") {
    const FronthaulParams p{20, 2000, 20, 4, 60};
    const double s = savings_vs_centralized(p);
    CHECK(s == doctest::Approx(1.0 - 79600.0 / 960000.0));
    CHECK(s > 0.89);
    CHECK(s < 0.93);
    CHECK(savings_vs_centralized(FronthaulParams{0, 2000, 0, 4, 60}) == 1.0);
  }

  TEST_CASE("savings crosses zero where the linear totals meet") {
    const FronthaulParams base{20, 200, 20, 1, 1};
    // Oracle root of 2 tau_c N L = 2K(tau_c - tau_p) + K^2.
    const double root = (2.0 * 20 * 180 + 400) / (2.0 * 200 * 1);
    std::uint64_t first_positive = 0;
    for (std::uint64_t L = 1; L < 100; ++L) {
      FronthaulParams p = base;
      p.L = L;
      if (savings_vs_centralized(p) > 0.0) {
        first_positive = L;
        break;
      }
    }
    CHECK(static_cast<double>(first_positive) > root);
    CHECK(static_cast<double>(first_positive) - 1.0 <= root);
  }

  TEST_CASE("per-link sequential loads do not depend on L; centralized is linear") {
    for (Algorithm a : {Algorithm::kOslp, Algorithm::kNLmmse, Algorithm::kSequentialMr, Algorithm::kRls}) {
      CHECK(fronthaul_count(a, {10, 500, 10, 2, 3}).total_per_link ==
            fronthaul_count(a, {10, 500, 10, 2, 50}).total_per_link);
    }
    const auto c1 = fronthaul_count(Algorithm::kCentralized, {10, 500, 10, 2, 1}).total_per_link;
    for (std::uint64_t L = 1; L < 30; ++L) {
      CHECK(fronthaul_count(Algorithm::kCentralized, {10, 500, 10, 2, L}).total_per_link == c1 * L);
    }
  }

  TEST_CASE("savings increase with L") {
    double prev = -1e300;
    for (std::uint64_t L = 1; L <= 100; ++L) {
      const double s = savings_vs_centralized({20, 2000, 20, 4, L});
      CHECK(s > prev);
      prev = s;
    }
  }

  TEST_CASE("invalid fronthaul input") {
    CHECK_THROWS_AS(fronthaul_count(Algorithm::kOslp, {1, 10, 11, 1, 1}), DomainError);
    CHECK_THROWS_AS(fronthaul_count(static_cast<Algorithm>(99), {1, 10, 1, 1, 1}), UsageError);
  }

  TEST_CASE("pipelined latency") {
    const Latency a = latency_blocks(1980, 24);
    CHECK(a.pipelined == 2004u);
    CHECK(a.naive == 47520u);
    CHECK(latency_blocks(77, 1).pipelined == 78u);
    CHECK(latency_blocks(1, 9).pipelined == 10u);
    CHECK_THROWS_AS(latency_blocks(0, 3), DomainError);
  }
}
