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

#include "stripe/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "stripe/channel.hpp"
#include "stripe/estimation.hpp"
#include "stripe/geometry.hpp"
#include "stripe/metrics.hpp"
#include "stripe/receivers.hpp"
#include "stripe/rng.hpp"

#ifndef STRIPE_VERSION
#define STRIPE_VERSION "0.0.0"
#endif

namespace stripe {
namespace {

// Per-drop, per-algorithm, per-UE SE and MSE.
struct DropResult {
  std::vector<RVec> se;
  std::vector<RVec> mse;
};

DropResult simulate_drop(const SimConfig& config, std::size_t drop) {
  const std::size_t K = config.K;
  const std::size_t L = config.L;
  const RVec powers = ue_powers(config);
  const double sigma2 = noise_power_mw(config);

  Rng geo_rng = make_stream(config.rng_seed, StreamTag::kGeometry, {drop});
  const NetworkGeometry geometry = build_geometry(config, geo_rng);
  const ChannelStatistics stats = build_channel_statistics(geometry, config);
  const PilotAssignment pilots = assign_pilots(K, config.tau_p, stats.beta, config.pilots);
  const EstimationStatistics est = estimation_statistics(stats, pilots, powers, sigma2);
  const ChannelSampler sampler(stats);

  ReceiverOptions options;
  options.noise_power = sigma2;
  options.rls_delta = config.rls_delta;

  const std::size_t A = config.algorithms.size();
  DropResult out;
  out.se.assign(A, RVec::Zero(static_cast<Eigen::Index>(K)));
  out.mse.assign(A, RVec::Zero(static_cast<Eigen::Index>(K)));

  std::vector<APLocalData> aps(L);
  for (std::size_t f = 0; f < config.n_fades; ++f) {
    Rng fade_rng = make_stream(config.rng_seed, StreamTag::kFading, {drop, f});
    Rng pilot_rng = make_stream(config.rng_seed, StreamTag::kPilotNoise, {drop, f});
    const ChannelRealization channels = sampler.draw(fade_rng, f);
    const std::vector<CMat> y_pilot = despreaded_observation(channels, pilots, powers, sigma2, pilot_rng);
    const std::vector<CMat> H_hat = estimate_channels(est, pilots, y_pilot);
    for (std::size_t l = 0; l < L; ++l) {
      aps[l].channel_estimate = H_hat[l];
      aps[l].noise_cov = est.Sigma[l];
      aps[l].received = CMat(H_hat[l].rows(), 0);
    }
    for (std::size_t a = 0; a < A; ++a) {
      const ReceiverOutput rx = run_receiver(config.algorithms[a], aps, powers, options);
      const MetricsRecord m = evaluate_receiver(rx, aps, powers);
      out.se[a] += m.sinr.unaryExpr([](double g) { return std::log2(1.0 + g); });
      out.mse[a] += m.mse;
    }
  }
  const double prelog = 1.0 - static_cast<double>(config.tau_p) / static_cast<double>(config.tau_c);
  const double inv = 1.0 / static_cast<double>(config.n_fades);
  for (std::size_t a = 0; a < A; ++a) {
    out.se[a] *= prelog * inv;
    out.mse[a] *= inv;
  }
  return out;
}

}  // namespace

const AlgorithmResult& CampaignResult::at(Algorithm a) const {
  for (const auto& r : algorithms) {
    if (r.algorithm == a) return r;
  }
  throw UsageError("algorithm " + std::string(algorithm_name(a)) + " was not simulated");
}

std::string library_version() { return STRIPE_VERSION; }

Provenance make_provenance(const SimConfig& config) {
  Provenance p;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash(config)));
  p.config_hash = buf;
  p.seed = config.rng_seed;
  p.version = library_version();
  p.config_text = to_config_text(config);
  return p;
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples) {
  if (samples.empty()) throw UsageError("CDF of an empty sample set");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  std::vector<std::pair<double, double>> cdf;
  cdf.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    cdf.emplace_back(samples[i], static_cast<double>(i + 1) / n);
  }
  return cdf;
}

double quantile(std::vector<double> samples, double q) {
  if (samples.empty()) throw UsageError("quantile of an empty sample set");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  // Smallest i (1-based) with i / n >= q, computed without rounding drift.
  std::size_t i = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  while (i > 1 && static_cast<double>(i - 1) / static_cast<double>(n) >= q) --i;
  while (i < n && static_cast<double>(i) / static_cast<double>(n) < q) ++i;
  return samples[std::max<std::size_t>(i, 1) - 1];
}

Summary summarize(const std::vector<double>& samples) {
  if (samples.empty()) throw UsageError("summary of an empty sample set");
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  Summary s;
  s.n = sorted.size();
  double sum = 0.0;
  for (double x : sorted) sum += x;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double x : sorted) ss += (x - s.mean) * (x - s.mean);
    s.stderr_mean = std::sqrt(ss / static_cast<double>(s.n - 1) / static_cast<double>(s.n));
  }
  s.median = quantile(sorted, 0.5);
  s.p05 = quantile(sorted, 0.05);
  s.p95 = quantile(sorted, 0.95);
  return s;
}

CampaignResult run_campaign(const SimConfig& config, std::size_t threads) {
  validate(config);
  if (config.algorithms.empty()) throw ConfigError("algorithms", "at least one algorithm is required");

  const std::size_t drops = config.n_drops;
  std::vector<DropResult> per_drop(drops);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(drops, 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t d = next.fetch_add(1);
      if (d >= drops) return;
      try {
        per_drop[d] = simulate_drop(config, d);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(drops);
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CampaignResult result;
  result.config = config;
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    AlgorithmResult r;
    r.algorithm = config.algorithms[a];
    r.samples.reserve(drops * config.K);
    std::vector<double> se, mse;
    for (std::size_t d = 0; d < drops; ++d) {
      for (std::size_t k = 0; k < config.K; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        r.samples.push_back({d, k, per_drop[d].se[a](kk), per_drop[d].mse[a](kk)});
        se.push_back(per_drop[d].se[a](kk));
        mse.push_back(per_drop[d].mse[a](kk));
      }
    }
    if (!se.empty()) {
      r.se = summarize(se);
      r.mse = summarize(mse);
    }
    result.algorithms.push_back(std::move(r));
  }
  FronthaulParams fp{config.K, config.tau_c, config.tau_p, config.N, config.L};
  std::vector<Algorithm> rows = {Algorithm::kCentralized, Algorithm::kOslp, Algorithm::kNLmmse,
                                 Algorithm::kSequentialMr, Algorithm::kRls};
  result.fronthaul = fronthaul_report(fp, rows);
  result.provenance = make_provenance(config);
  return result;
}

}  // namespace stripe
