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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "stripe/campaign.hpp"
#include "stripe/channel.hpp"
#include "stripe/estimation.hpp"
#include "stripe/fronthaul.hpp"
#include "stripe/rng.hpp"
#include "stripe/verify.hpp"

using namespace stripe;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s criterion %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::string check_detail(const CheckResult& c) {
  return c.name + " worst " + fmt("%.3g tol %.0e over %.0f evaluations", c.worst_error, c.tolerance,
                                  static_cast<double>(c.evaluated));
}

void estimation_identities() {
  const double deg = std::numbers::pi / 180.0;
  const std::size_t N = 4;
  std::vector<CMat> R = {local_scattering_correlation(N, 20 * deg, 15 * deg, 1.0),
                         local_scattering_correlation(N, -50 * deg, 15 * deg, 0.4)};
  const auto stats = make_channel_statistics(2, 1, R);
  PilotAssignment pilots;
  pilots.tau_p = 1;
  pilots.pilot = {0, 0};
  const RVec powers = RVec::Constant(2, 1.0);
  const double sigma2 = 0.3;
  const auto est = estimation_statistics(stats, pilots, powers, sigma2);

  double split = 0.0;
  for (std::size_t k = 0; k < 2; ++k) {
    const CMat& Rk = stats.correlation(k, 0);
    split = std::max(split, (est.R_hat_at(k, 0) + est.R_tilde_at(k, 0) - Rk).norm() / Rk.norm());
  }

  const ChannelSampler sampler(stats);
  Rng fading = make_stream(2026, StreamTag::kFading, {0});
  Rng noise = make_stream(2026, StreamTag::kPilotNoise, {0});
  const int n = 100000;
  CMat cross = CMat::Zero(N, N);
  for (int i = 0; i < n; ++i) {
    const auto ch = sampler.draw(fading);
    const auto y = despreaded_observation(ch, pilots, powers, sigma2, noise);
    const auto H_hat = estimate_channels(est, pilots, y);
    const CVec h_hat = H_hat[0].col(0);
    const CVec h_tilde = ch.H[0].col(0) - h_hat;
    cross += h_hat * h_tilde.adjoint();
  }
  cross /= static_cast<double>(n);
  const double bound = 5.0 / std::sqrt(static_cast<double>(n)) * stats.correlation(0, 0).norm();
  const double err = cross.norm();
  report(7, "estimation identities", split <= 1e-14 && err <= bound,
         fmt("split rel err %.2g, cross-cov %.3g <= bound %.3g", split, err, bound));
}

void fronthaul_table() {
  const FronthaulParams t{20, 2000, 20, 4, 24};
  bool ok = fronthaul_count(Algorithm::kCentralized, t).total_per_link == 2ull * 2000 * 4 * 24;
  for (Algorithm a : {Algorithm::kOslp, Algorithm::kRls}) {
    ok = ok && fronthaul_count(a, t).total_per_link == 2ull * 20 * 1980 + 400;
  }
  ok = ok && fronthaul_count(Algorithm::kNLmmse, t).total_per_link == 2ull * 20 * 1980 + 2 * 20 * 20 + 20;
  ok = ok && fronthaul_count(Algorithm::kSequentialMr, t).total_per_link == 2ull * 20 * 1980 + 20;
  const double s = savings_vs_centralized({20, 2000, 20, 4, 60});
  const Latency lat = latency_blocks(1980, 24);
  ok = ok && s >= 0.89 && s <= 0.93 && lat.pipelined == 2004;
  report(8, "fronthaul table", ok, fmt("savings %.4f, pipelined latency %.0f blocks", s, double(lat.pipelined)));
}

double median_se(const CampaignResult& r, Algorithm a) { return r.at(a).se.median; }

SimConfig desk_scale(const std::string& name) {
  SimConfig c = preset(name);
  c.n_drops = 100;
  c.n_fades = 20;
  return c;
}

void figure3() {
  SimConfig c = desk_scale("paper-fig3");
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_campaign(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const auto& o = r.at(Algorithm::kOslp).samples;
  const auto& cent = r.at(Algorithm::kCentralized).samples;
  double worst = 0.0;
  for (std::size_t i = 0; i < o.size(); ++i) worst = std::max(worst, std::abs(o[i].se - cent[i].se));
  const double mo = median_se(r, Algorithm::kOslp);
  const double mn = median_se(r, Algorithm::kNLmmse);
  const double mm = median_se(r, Algorithm::kSequentialMr);
  const bool ok = worst <= 1e-9 && mo - mn > 0.2 && mn - mm > 0.2 && secs < 600.0;
  report(9, "figure 3 ordering", ok,
         fmt("max |OSLP-cent| %.2g; medians OSLP %.3f N-LMMSE %.3f", worst, mo, mn) + fmt(" MR %.3f; %.1f s", mm, secs));
}

void figures45() {
  const auto r4 = run_campaign(desk_scale("paper-fig4"));
  const auto r5 = run_campaign(desk_scale("paper-fig5"));
  const double g4 = median_se(r4, Algorithm::kOslp) - median_se(r4, Algorithm::kRls);
  const double g5 = median_se(r5, Algorithm::kOslp) - median_se(r5, Algorithm::kRls);
  const bool ok = g4 > 0.0 && std::abs(g4 - 1.24) <= 0.5 && g5 > 0.0 && std::abs(g5 - 0.24) <= 0.2;
  report(10, "figures 4 and 5 RLS gap", ok, fmt("gap K=24 %.3f (1.24 +/- 0.5), gap 1 mW %.3f (0.24 +/- 0.2)", g4, g5));
}

}  // namespace

int main() {
  VerifyOptions o;
  o.instances = 200;
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport v = verify(o);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto& th = v.check("centralized_equivalence");
  report(1, "OSLP equals centralized", th.passed() && secs < 30.0, check_detail(th) + fmt(", %.2f s", secs));
  const auto& ord = v.check("ordering_invariance");
  report(2, "AP ordering invariance", ord.passed(), check_detail(ord));
  const auto& mono = v.check("monotonicity");
  const auto& dual = v.check("mse_sinr_duality");
  report(3, "monotone SINR and MSE", mono.passed() && dual.passed(), check_detail(mono) + "; " + check_detail(dual));
  const auto& p3 = v.check("incremental_sinr");
  report(4, "incremental SINR updates", p3.passed(), check_detail(p3));
  const auto& alt = v.check("alt_oslp_equivalence");
  report(5, "alternative OSLP", alt.passed(), check_detail(alt));
  const auto& smr = v.check("smr_identity");
  report(6, "sequential MR closed form", smr.passed(), check_detail(smr));

  estimation_identities();
  fronthaul_table();
  figure3();
  figures45();

  o.perturb = true;
  const auto bad = verify(o);
  const auto& pt = bad.check("centralized_equivalence");
  report(11, "perturbed run is rejected", !pt.passed() && !bad.passed(), check_detail(pt));

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
