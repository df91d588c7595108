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

#include "stripe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "stripe/linalg.hpp"
#include "stripe/metrics.hpp"
#include "stripe/rng.hpp"

namespace stripe {
namespace {

constexpr std::size_t kMaxFailingSeeds = 16;

double rel_diff(const CMat& a, const CMat& b) {
  const double scale = std::max(b.norm(), 1e-300);
  return (a - b).norm() / scale;
}

double rel_scalar(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Check {
 public:
  Check(std::string name, double tol) { result_.name = std::move(name), result_.tolerance = tol; }

  // Records one measured error for the instance `seed`, against the
  // check's tolerance or `tol` when given.
  void record(double error, std::uint64_t seed, double tol = 0.0) {
    ++result_.evaluated;
    if (std::isnan(error)) error = INFINITY;
    result_.worst_error = std::max(result_.worst_error, error);
    if (!(error <= (tol > 0.0 ? tol : result_.tolerance))) fail(seed);
  }
  void fail(std::uint64_t seed) {
    auto& f = result_.failing_seeds;
    if (std::find(f.begin(), f.end(), seed) == f.end() && f.size() < kMaxFailingSeeds) f.push_back(seed);
  }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

CMat random_correlation(Rng& rng, std::size_t N, double beta) {
  std::uniform_int_distribution<std::size_t> rank_dist(1, N);
  const auto n = static_cast<Eigen::Index>(N);
  const CMat A = complex_normal(rng, n, static_cast<Eigen::Index>(rank_dist(rng)));
  CMat R = A * A.adjoint();
  R += 0.05 * (R.trace().real() / static_cast<double>(N)) * CMat::Identity(n, n);
  R *= beta * static_cast<double>(N) / R.trace().real();
  return hermitian_part(R);
}

// OSLP fold with P disturbed after every step.
ReceiverOutput perturbed_oslp(std::span<const APLocalData> aps, const RVec& powers, Rng& rng) {
  SequentialState state = initial_state(powers, aps.front().received.cols(), true);
  const double scale = 1e-3 * powers.maxCoeff();
  for (const auto& ap : aps) {
    state = oslp_step(state, ap);
    const Eigen::Index K = state.error_cov.rows();
    state.error_cov += scale * hermitian_part(complex_normal(rng, K, K));
  }
  ReceiverOutput out;
  out.algorithm = Algorithm::kOslp;
  out.estimate = state.estimate;
  out.error_cov = state.error_cov;
  out.combiner = state.combiner;
  return out;
}

struct Suite {
  Check equivalence{"centralized_equivalence", 1e-9};
  Check ordering{"ordering_invariance", 1e-9};
  Check monotonicity{"monotonicity", 1e-12};
  Check duality{"mse_sinr_duality", 1e-12};
  Check incremental{"incremental_sinr", 1e-9};
  Check alt{"alt_oslp_equivalence", 1e-9};
  Check smr{"smr_identity", 1e-13};
  Check covariance{"covariance_identities", 1e-10};
  Check block{"block_inverse_identity", 1e-10};
};

void run_instance(const VerifyInstance& inst, const VerifyOptions& options, Suite& suite) {
  const std::uint64_t seed = inst.seed;
  const std::span<const APLocalData> aps(inst.aps);
  const RVec& p = inst.powers;
  const double q_norm = p.norm();
  const auto K = static_cast<Eigen::Index>(inst.K);

  const ReceiverOutput cent = centralized_lmmse(aps, p);
  const ReceiverOutput oslp = oslp_run(aps, p);

  // Estimate, error covariance and receiver.
  {
    ReceiverOutput checked = oslp;
    if (options.perturb) {
      Rng rng = make_stream(seed, StreamTag::kVerify, {99});
      checked = perturbed_oslp(aps, p, rng);
    }
    const double e_s = rel_diff(checked.estimate, cent.estimate);
    const double e_p = (*checked.error_cov - *cent.error_cov).norm() / q_norm;
    const double e_v = rel_diff(*checked.combiner, *cent.combiner);
    suite.equivalence.record(std::max({e_s, e_p, e_v}), seed);
  }

  // Ordering invariance over 5 random permutations.
  {
    Rng rng = make_stream(seed, StreamTag::kVerify, {7});
    std::vector<std::size_t> order(inst.L);
    std::iota(order.begin(), order.end(), std::size_t{0});
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<APLocalData> permuted;
      for (std::size_t l : order) permuted.push_back(inst.aps[l]);
      const ReceiverOutput r = oslp_run(permuted, p, false);
      worst = std::max({worst, rel_diff(r.estimate, oslp.estimate), (*r.error_cov - *oslp.error_cov).norm() / q_norm});
    }
    suite.ordering.record(worst, seed);
  }

  // Trace of incremental quantities and the per-prefix oracles.
  CMat P_final;
  const auto trace = oslp_trace(aps, p, &P_final);
  SequentialState state = initial_state(p, inst.aps.front().received.cols(), false);
  std::vector<APLocalData> prefix;
  double mono_worst = 0.0, dual_worst = 0.0, incr_worst = 0.0, psd_worst = 0.0;
  for (std::size_t l = 0; l < inst.L; ++l) {
    const CMat P_prev = state.error_cov;
    state = oslp_step(state, inst.aps[l]);
    prefix.push_back(inst.aps[l]);
    const CMat G = stack_channel_estimates(prefix);
    const CMat K_L = stack_noise_covariance(prefix);
    const CMat lambda = lambda_matrix(G, K_L, p);

    // P_l PSD and P_{l-1} - P_l PSD, relative to ||Q||.
    psd_worst = std::max(psd_worst, -hermitian_eigenvalues(state.error_cov).minCoeff() / q_norm);
    psd_worst = std::max(psd_worst, -hermitian_eigenvalues(P_prev - state.error_cov).minCoeff() / q_norm);

    for (Eigen::Index k = 0; k < K; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const SinrIncrement& now = trace[l][kk];
      const SinrIncrement& before = l == 0 ? sinr_increment_initial(p(k)) : trace[l - 1][kk];
      const double slack_scale = std::max(1.0, std::abs(now.sinr));
      mono_worst = std::max(mono_worst, (before.sinr - now.sinr) / slack_scale);
      mono_worst = std::max(mono_worst, (now.mse - before.mse) / p(k));
      mono_worst = std::max(mono_worst, -now.alpha / p(k));

      const double gmax = max_sinr(kk, G, K_L, p);
      const double emin = min_mse(G.col(k), lambda, p(k));
      dual_worst = std::max(dual_worst, rel_scalar(emin, p(k) / (1.0 + gmax)));

      incr_worst = std::max(incr_worst, std::abs(now.mse - state.error_cov(k, k).real()) / p(k));
      incr_worst = std::max(incr_worst, std::abs(now.sinr - gmax) / std::max(1.0, gmax));
      incr_worst = std::max(incr_worst, std::abs(now.rate - std::log2(1.0 + gmax)));
      incr_worst = std::max(incr_worst, std::abs(now.mse - emin) / p(k));
    }
  }
  suite.monotonicity.record(mono_worst, seed);
  suite.monotonicity.record(psd_worst, seed, 1e-10);
  suite.duality.record(dual_worst, seed);
  suite.incremental.record(incr_worst, seed);

  // Alternative OSLP.
  {
    const ReceiverOutput alt = alt_oslp_run(aps, p);
    const double e = std::max({rel_diff(alt.estimate, oslp.estimate), (*alt.error_cov - *oslp.error_cov).norm() / q_norm,
                               rel_diff(*alt.combiner, *oslp.combiner)});
    suite.alt.record(e, seed);
  }

  // Sequential MR against the one-shot G^H z.
  const CMat G = stack_channel_estimates(aps);
  const CMat z = stack_received(aps);
  {
    const ReceiverOutput mr = sequential_mr(aps);
    const CMat direct = G.adjoint() * z;
    const double scale = std::max(G.norm() * z.norm(), 1e-300);
    const double e = std::max((mr.estimate - direct).norm() / scale, (*mr.combiner - G.adjoint()).norm());
    suite.smr.record(e, seed);
  }

  // Covariance identities and the defining identity Bbar z = s of every receiver.
  {
    double worst = 0.0, sigma_worst = 0.0, diag_worst = 0.0, combiner_worst = 0.0;
    const EstimationStatistics& est = inst.estimation;
    for (std::size_t k = 0; k < inst.K; ++k) {
      for (std::size_t l = 0; l < inst.L; ++l) {
        const CMat& R = inst.stats.correlation(k, l);
        worst = std::max(worst, rel_diff(est.R_hat_at(k, l) + est.R_tilde_at(k, l), R));
      }
    }
    for (std::size_t l = 0; l < inst.L; ++l) {
      const RVec eig = hermitian_eigenvalues(est.Sigma[l]);
      sigma_worst = std::max(sigma_worst, (inst.sigma2 - eig.minCoeff()) / inst.sigma2);
    }
    const RVec diag_p = P_final.diagonal().real();
    const CMat lambda = lambda_matrix(G, stack_noise_covariance(aps), p);
    for (Eigen::Index k = 0; k < K; ++k) {
      diag_worst = std::max(diag_worst, std::abs(diag_p(k) - min_mse(G.col(k), lambda, p(k))) / p(k));
    }
    ReceiverOptions ro;
    ro.noise_power = inst.sigma2;
    for (Algorithm a : {Algorithm::kCentralized, Algorithm::kOslp, Algorithm::kAltOslp, Algorithm::kNLmmse,
                        Algorithm::kSequentialMr, Algorithm::kRls}) {
      const ReceiverOutput r = run_receiver(a, aps, p, ro);
      combiner_worst = std::max(combiner_worst, rel_diff(effective_combiner(r) * z, r.estimate));
    }
    suite.covariance.record(worst, seed, 1e-12);
    suite.covariance.record(sigma_worst, seed, 1e-10);
    suite.covariance.record(diag_worst, seed, 1e-9);
    suite.covariance.record(combiner_worst, seed, 1e-10);
  }

  // Block inversion against a dense inverse, on Lambda split after the first AP.
  {
    const CMat lambda = lambda_matrix(G, stack_noise_covariance(aps), p);
    const Eigen::Index n1 = inst.aps.front().antennas();
    const Eigen::Index n2 = lambda.rows() - n1;
    CMat full = lambda;
    Eigen::Index a = n1, b = n2;
    if (n2 == 0) {
      // Single AP: split the antenna array instead, or pad with a unit block.
      if (n1 > 1) {
        a = n1 / 2;
        b = n1 - a;
      } else {
        full = CMat::Identity(2, 2);
        full(0, 0) = lambda(0, 0);
        a = b = 1;
      }
    }
    const CMat inv = block_inverse(full.topLeftCorner(a, a), full.topRightCorner(a, b), full.bottomLeftCorner(b, a),
                                   full.bottomRightCorner(b, b));
    const CMat dense = full.partialPivLu().inverse();
    suite.block.record(rel_diff(inv, dense), seed);
  }
}

}  // namespace

std::uint64_t verify_instance_seed(std::uint64_t seed, std::size_t i) {
  Rng rng = make_stream(seed, StreamTag::kVerify, {i});
  return rng();
}

VerifyInstance make_verify_instance(std::uint64_t instance_seed, bool force_single_ap) {
  Rng rng = make_stream(instance_seed, StreamTag::kVerify, {0});
  std::uniform_int_distribution<std::size_t> L_dist(1, 6), N_dist(1, 4), K_dist(1, 8), T_dist(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  VerifyInstance inst;
  inst.seed = instance_seed;
  inst.L = force_single_ap ? 1 : L_dist(rng);
  inst.N = N_dist(rng);
  inst.K = K_dist(rng);
  const auto T = static_cast<Eigen::Index>(T_dist(rng));
  inst.sigma2 = std::pow(10.0, -unit(rng));
  inst.powers.resize(static_cast<Eigen::Index>(inst.K));
  for (Eigen::Index k = 0; k < inst.powers.size(); ++k) inst.powers(k) = 0.5 + 1.5 * unit(rng);

  std::vector<CMat> R;
  R.reserve(inst.K * inst.L);
  for (std::size_t k = 0; k < inst.K; ++k) {
    for (std::size_t l = 0; l < inst.L; ++l) {
      R.push_back(random_correlation(rng, inst.N, std::pow(10.0, unit(rng) - 0.5)));
    }
  }
  inst.stats = make_channel_statistics(inst.K, inst.L, std::move(R));

  std::uniform_int_distribution<std::size_t> tau_dist(1, inst.K);
  const std::size_t tau_p = tau_dist(rng);
  const PilotScheme scheme = unit(rng) < 0.5 ? PilotScheme::kGreedy : PilotScheme::kRoundRobin;
  inst.pilots = assign_pilots(inst.K, tau_p, inst.stats.beta, scheme);
  inst.estimation = estimation_statistics(inst.stats, inst.pilots, inst.powers, inst.sigma2);

  const ChannelRealization channels = draw_channels(inst.stats, rng);
  const std::vector<CMat> y_pilot = despreaded_observation(channels, inst.pilots, inst.powers, inst.sigma2, rng);
  const std::vector<CMat> H_hat = estimate_channels(inst.estimation, inst.pilots, y_pilot);

  const CMat s = inst.powers.cwiseSqrt().cast<cdouble>().asDiagonal() *
                 complex_normal(rng, static_cast<Eigen::Index>(inst.K), T);
  for (std::size_t l = 0; l < inst.L; ++l) {
    APLocalData ap;
    ap.channel_estimate = H_hat[l];
    ap.noise_cov = inst.estimation.Sigma[l];
    ap.received = channels.H[l] * s +
                  std::sqrt(inst.sigma2) * complex_normal(rng, static_cast<Eigen::Index>(inst.N), T);
    inst.aps.push_back(std::move(ap));
  }
  return inst;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw UsageError("no verification check named " + name);
}

VerificationReport verify(const VerifyOptions& options) {
  Suite suite;
  for (std::size_t i = 0; i < options.instances; ++i) {
    const std::uint64_t s = verify_instance_seed(options.seed, i);
    const VerifyInstance inst = make_verify_instance(s, i == 0);
    try {
      run_instance(inst, options, suite);
    } catch (const NumericError&) {
      suite.equivalence.fail(s);
    }
  }
  VerificationReport report;
  report.instances = options.instances;
  report.seed = options.seed;
  report.perturbed = options.perturb;
  for (Check* c : {&suite.equivalence, &suite.ordering, &suite.monotonicity, &suite.duality, &suite.incremental, &suite.alt,
                   &suite.smr, &suite.covariance, &suite.block}) {
    report.checks.push_back(c->take());
  }
  return report;
}

}  // namespace stripe
