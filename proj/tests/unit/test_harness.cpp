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

#include <algorithm>
#include <filesystem>
#include <random>
#include <vector>

#include "doctest.h"
#include "stripe/campaign.hpp"
#include "stripe/config.hpp"
#include "stripe/results_io.hpp"
#include "stripe/verify.hpp"

using namespace stripe;

namespace {

SimConfig small_config() {
  SimConfig c;
  c.L = 6;
  c.N = 2;
  c.K = 4;
  c.tau_p = 2;
  c.n_drops = 3;
  c.n_fades = 4;
  c.rng_seed = 17;
  c.algorithms = {Algorithm::kOslp, Algorithm::kCentralized, Algorithm::kNLmmse, Algorithm::kSequentialMr,
                  Algorithm::kRls};
  return c;
}

std::vector<double> se_of(const AlgorithmResult& r) {
  std::vector<double> v;
  for (const auto& s : r.samples) v.push_back(s.se);
  return v;
}

}  // namespace

TEST_SUITE("harness_cli") {
  TEST_CASE("config text round trip") {
    SimConfig c = small_config();
    c.rls_delta = 0.25;
    c.pilots = PilotScheme::kRoundRobin;
    const SimConfig back = parse_config(to_config_text(c));
    CHECK(to_config_text(back) == to_config_text(c));
    CHECK(config_hash(back) == config_hash(c));
    c.K = 5;
    CHECK(config_hash(back) != config_hash(c));
  }

  TEST_CASE("config parse errors name the field") {
    CHECK_THROWS_AS(parse_config("K = ten"), ConfigError);
    CHECK_THROWS_AS(parse_config("bogus = 1"), ConfigError);
    CHECK_THROWS_AS(parse_config("algorithms = oslp,foo"), ConfigError);
    try {
      validate(parse_config("tau_p = 30000"));
      FAIL("expected a config error");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "tau_p");
    }
    SimConfig c;
    c.n_drops = 0;
    CHECK_THROWS_AS(validate(c), ConfigError);
  }

  TEST_CASE("presets") {
    for (const auto& name : preset_names()) CHECK_NOTHROW(validate(preset(name)));
    const SimConfig f4 = preset("paper-fig4");
    CHECK(f4.K == 24);
    CHECK(f4.N == 1);
    CHECK(preset("paper-fig5").ue_power_mW == 1.0);
    CHECK_THROWS_AS(preset("fig9"), ConfigError);
  }

  TEST_CASE("OSLP and centralized give identical per-UE SE") {
    const auto r = run_campaign(small_config(), 2);
    const auto a = se_of(r.at(Algorithm::kOslp));
    const auto b = se_of(r.at(Algorithm::kCentralized));
    REQUIRE(a.size() == 12);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-9 * std::max(1.0, b[i]));
  }

  TEST_CASE("OSLP dominates MR per UE") {
    const auto r = run_campaign(small_config(), 1);
    const auto& o = r.at(Algorithm::kOslp).samples;
    const auto& m = r.at(Algorithm::kSequentialMr).samples;
    for (std::size_t i = 0; i < o.size(); ++i) CHECK(o[i].se >= m[i].se - 1e-12);
  }

  TEST_CASE("campaign is deterministic and independent of thread count") {
    const SimConfig c = small_config();
    const auto one = run_campaign(c, 1);
    const auto four = run_campaign(c, 4);
    CHECK(summary_json(one) == summary_json(four));
    for (std::size_t a = 0; a < one.algorithms.size(); ++a) {
      CHECK(to_csv(one.algorithms[a].samples) == to_csv(four.algorithms[a].samples));
    }
    SimConfig other = c;
    other.rng_seed = 18;
    CHECK(to_csv(run_campaign(other, 1).algorithms[0].samples) != to_csv(one.algorithms[0].samples));
  }

  TEST_CASE("written results are byte identical across runs and round trip") {
    const SimConfig c = small_config();
    const auto dir = std::filesystem::temp_directory_path() / "stripe_harness_test";
    std::filesystem::remove_all(dir);
    const auto r = run_campaign(c, 2);
    write_results(dir / "a", r);
    write_results(dir / "b", run_campaign(c, 3));
    for (const auto& entry : std::filesystem::directory_iterator(dir / "a")) {
      const auto name = entry.path().filename();
      CHECK(read_text_file(entry.path()) == read_text_file(dir / "b" / name));
    }
    const auto parsed = parse_summary_json(read_text_file(dir / "a" / "summary.json"));
    for (const auto& alg : r.algorithms) {
      const auto samples = read_csv_file(dir / "a" / csv_file_name(alg.algorithm));
      REQUIRE(samples.size() == alg.samples.size());
      for (std::size_t i = 0; i < samples.size(); ++i) {
        CHECK(samples[i].se == alg.samples[i].se);
        CHECK(samples[i].mse == alg.samples[i].mse);
      }
      std::vector<double> se;
      for (const auto& s : samples) se.push_back(s.se);
      const Summary again = summarize(se);
      const SummaryEntry& e = parsed.at(std::string(algorithm_name(alg.algorithm)));
      CHECK(again.mean == e.se.mean);
      CHECK(again.median == e.se.median);
      CHECK(again.p05 == e.se.p05);
      CHECK(again.p95 == e.se.p95);
      CHECK(again.stderr_mean == e.se.stderr_mean);
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("empirical CDF examples") {
    const auto one = empirical_cdf({1.0});
    REQUIRE(one.size() == 1);
    CHECK(one[0].first == 1.0);
    CHECK(one[0].second == 1.0);
    CHECK(quantile({4.0, 2.0, 3.0, 1.0}, 0.5) == 2.0);
    CHECK_THROWS_AS(quantile({}, 0.5), UsageError);
  }

  TEST_CASE("empirical CDF is monotone, ends at one and agrees with quantiles") {
    std::mt19937_64 g(5);
    std::normal_distribution<double> n;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> x(1 + trial * 7);
      for (double& v : x) v = n(g);
      const auto cdf = empirical_cdf(x);
      CHECK(cdf.back().second == 1.0);
      for (std::size_t i = 1; i < cdf.size(); ++i) {
        CHECK(cdf[i].first >= cdf[i - 1].first);
        CHECK(cdf[i].second > cdf[i - 1].second);
      }
      for (double q : {0.05, 0.5, 0.95}) {
        const double v = quantile(x, q);
        const auto it = std::find_if(cdf.begin(), cdf.end(), [&](const auto& p) { return p.second >= q; });
        CHECK(it->first == v);
      }
    }
  }

  TEST_CASE("verification API") {
    VerifyOptions o;
    o.instances = 20;
    const auto ok = verify(o);
    CHECK(ok.passed());
    CHECK(ok.check("centralized_equivalence").evaluated > 0);
    o.perturb = true;
    const auto bad = verify(o);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.check("centralized_equivalence").passed());
    CHECK(verify_instance_seed(1, 3) == verify_instance_seed(1, 3));
    CHECK(verify_instance_seed(1, 3) != verify_instance_seed(2, 3));
  }
}
