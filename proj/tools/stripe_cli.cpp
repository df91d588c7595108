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

// stripe: radio-stripe uplink simulator.
//
//   stripe simulate --config FILE [--preset paper-fig3] [--algorithms oslp,cent]
//                   [--seed S] [--out DIR] [--threads T]
//   stripe fronthaul --K 20 --tauc 2000 --taup 20 --N 4 --L-range 1:60
//   stripe verify [--instances N] [--seed S] [--perturb]
//
// Exit status: 0 ok, 1 configuration error, 2 verification failure,
// 3 numeric failure.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "stripe/campaign.hpp"
#include "stripe/config.hpp"
#include "stripe/fronthaul.hpp"
#include "stripe/results_io.hpp"
#include "stripe/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitVerify = 2;
constexpr int kExitNumeric = 3;

struct SimulateArgs {
  std::string config_path;
  std::string preset;
  std::string algorithms;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> drops;
  std::optional<std::size_t> fades;
  std::string out = "results";
  std::size_t threads = 0;
};

struct FronthaulArgs {
  std::uint64_t K = 20;
  std::uint64_t tau_c = 2000;
  std::uint64_t tau_p = 20;
  std::uint64_t N = 4;
  std::string L_range = "1:60";
};

int run_simulate(const SimulateArgs& args) {
  stripe::SimConfig config;
  if (!args.preset.empty()) config = stripe::preset(args.preset);
  if (!args.config_path.empty()) config = stripe::load_config_file(args.config_path, config);
  if (!args.algorithms.empty()) config.algorithms = stripe::parse_algorithm_list(args.algorithms);
  if (args.seed) config.rng_seed = *args.seed;
  if (args.drops) config.n_drops = *args.drops;
  if (args.fades) config.n_fades = *args.fades;
  stripe::validate(config);

  const stripe::CampaignResult result = stripe::run_campaign(config, args.threads);
  stripe::write_results(args.out, result);

  std::printf("%-8s %8s %10s %10s %10s %10s\n", "algo", "n", "median", "p05", "p95", "mean");
  for (const auto& a : result.algorithms) {
    std::printf("%-8s %8zu %10.4f %10.4f %10.4f %10.4f\n", std::string(stripe::algorithm_name(a.algorithm)).c_str(),
                a.se.n, a.se.median, a.se.p05, a.se.p95, a.se.mean);
  }
  std::printf("wrote %s\n", args.out.c_str());
  return kExitOk;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw stripe::ConfigError("L-range", "expected A:B, got '" + text + "'");
  }
}

int run_fronthaul(const FronthaulArgs& args) {
  const auto [lo, hi] = parse_range(args.L_range);
  if (lo < 1 || hi < lo) throw stripe::ConfigError("L-range", "need 1 <= A <= B");
  if (args.tau_p > args.tau_c) throw stripe::ConfigError("taup", "must not exceed tauc");
  std::printf("L,cent,oslp,nlmmse,smr,rls,savings,latency_pipelined,latency_naive\n");
  for (std::uint64_t L = lo; L <= hi; ++L) {
    const stripe::FronthaulParams p{args.K, args.tau_c, args.tau_p, args.N, L};
    using stripe::Algorithm;
    std::printf("%llu", static_cast<unsigned long long>(L));
    for (Algorithm a : {Algorithm::kCentralized, Algorithm::kOslp, Algorithm::kNLmmse, Algorithm::kSequentialMr,
                        Algorithm::kRls}) {
      std::printf(",%llu", static_cast<unsigned long long>(stripe::fronthaul_count(a, p).total_per_link));
    }
    std::printf(",%.6f", stripe::savings_vs_centralized(p));
    if (args.tau_c > args.tau_p) {
      const stripe::Latency lat = stripe::latency_blocks(args.tau_c - args.tau_p, L);
      std::printf(",%llu,%llu\n", static_cast<unsigned long long>(lat.pipelined),
                  static_cast<unsigned long long>(lat.naive));
    } else {
      std::printf(",,\n");
    }
  }
  return kExitOk;
}

int run_verify(const stripe::VerifyOptions& options) {
  const stripe::VerificationReport report = stripe::verify(options);
  std::printf("verify: %zu instances, seed %llu%s\n", report.instances,
              static_cast<unsigned long long>(report.seed), report.perturbed ? ", perturbed" : "");
  for (const auto& c : report.checks) {
    std::printf("%-24s %s worst=%.3e tol=%.0e n=%zu", c.name.c_str(), c.passed() ? "PASS" : "FAIL", c.worst_error,
                c.tolerance, c.evaluated);
    if (!c.failing_seeds.empty()) {
      std::printf(" seeds=");
      for (std::size_t i = 0; i < c.failing_seeds.size(); ++i) {
        std::printf("%s%llu", i ? "," : "", static_cast<unsigned long long>(c.failing_seeds[i]));
      }
    }
    std::printf("\n");
  }
  return report.passed() ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uplink cell-free massive MIMO over a radio stripe"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo SE/MSE campaign");
  simulate->add_option("--config", sim.config_path, "key = value config file")->check(CLI::ExistingFile);
  simulate->add_option("--preset", sim.preset, "paper-fig3 | paper-fig4 | paper-fig5 | paper-fig6");
  simulate->add_option("--algorithms", sim.algorithms, "comma list of oslp,cent,altoslp,nlmmse,smr,rls");
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--drops", sim.drops, "override n_drops");
  simulate->add_option("--fades", sim.fades, "override n_fades");
  simulate->add_option("--out", sim.out, "output directory")->capture_default_str();
  simulate->add_option("--threads", sim.threads, "worker threads, 0 = all cores")->capture_default_str();

  FronthaulArgs fh;
  auto* fronthaul = app.add_subcommand("fronthaul", "fronthaul signaling per coherence block");
  fronthaul->add_option("--K", fh.K)->capture_default_str();
  fronthaul->add_option("--tauc", fh.tau_c)->capture_default_str();
  fronthaul->add_option("--taup", fh.tau_p)->capture_default_str();
  fronthaul->add_option("--N", fh.N)->capture_default_str();
  fronthaul->add_option("--L-range", fh.L_range, "A:B")->capture_default_str();

  stripe::VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "randomized receiver identity checks");
  verify->add_option("--instances", vo.instances)->capture_default_str();
  verify->add_option("--seed", vo.seed)->capture_default_str();
  verify->add_flag("--perturb", vo.perturb, "disturb the OSLP error covariance (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*simulate) {
      if (sim.config_path.empty() && sim.preset.empty()) {
        throw stripe::ConfigError("config", "give --config or --preset");
      }
      return run_simulate(sim);
    }
    if (*fronthaul) return run_fronthaul(fh);
    if (*verify) return run_verify(vo);
  } catch (const stripe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const stripe::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const stripe::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
