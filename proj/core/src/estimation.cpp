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

#include "stripe/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "stripe/linalg.hpp"

namespace stripe {

std::vector<std::size_t> PilotAssignment::co_pilot_set(std::size_t k) const {
  return users_on_pilot(pilot.at(k));
}

std::vector<std::size_t> PilotAssignment::users_on_pilot(std::size_t t) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pilot.size(); ++i)
    if (pilot[i] == t) out.push_back(i);
  return out;
}

PilotAssignment assign_pilots(std::size_t K, std::size_t tau_p, const RMat& beta, PilotScheme scheme) {
  if (tau_p < 1) throw ConfigError("tau_p", "must be >= 1");
  PilotAssignment out;
  out.tau_p = tau_p;
  out.pilot.assign(K, 0);

  if (scheme == PilotScheme::kRoundRobin || K <= tau_p) {
    for (std::size_t k = 0; k < K; ++k) out.pilot[k] = k % tau_p;
    return out;
  }
  if (beta.rows() != static_cast<Eigen::Index>(K) || beta.cols() < 1)
    throw UsageError("assign_pilots: beta must be K x L");

  for (std::size_t k = 0; k < tau_p; ++k) out.pilot[k] = k;

  std::vector<std::size_t> rest(K - tau_p);
  std::iota(rest.begin(), rest.end(), tau_p);
  auto strongest = [&](std::size_t k) { return beta.row(static_cast<Eigen::Index>(k)).maxCoeff(); };
  std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return strongest(a) > strongest(b); });

  std::vector<bool> assigned(K, false);
  std::fill(assigned.begin(), assigned.begin() + static_cast<std::ptrdiff_t>(tau_p), true);
  for (std::size_t k : rest) {
    Eigen::Index master = 0;
    beta.row(static_cast<Eigen::Index>(k)).maxCoeff(&master);
    std::vector<double> interference(tau_p, 0.0);
    for (std::size_t i = 0; i < K; ++i)
      if (assigned[i]) interference[out.pilot[i]] += beta(static_cast<Eigen::Index>(i), master);
    out.pilot[k] = static_cast<std::size_t>(std::min_element(interference.begin(), interference.end()) -
                                            interference.begin());
    assigned[k] = true;
  }
  return out;
}

std::vector<CMat> despreaded_observation(const ChannelRealization& channels, const PilotAssignment& assignment,
                                         const RVec& powers, double sigma2, Rng& rng) {
  const std::size_t tau_p = assignment.tau_p;
  const double noise_std = std::sqrt(sigma2);
  std::vector<CMat> out;
  out.reserve(channels.H.size());
  for (const CMat& H : channels.H) {
    if (H.cols() != static_cast<Eigen::Index>(assignment.num_ues()))
      throw UsageError("despreaded_observation: channel matrix has wrong UE count");
    CMat y = noise_std * complex_normal(rng, H.rows(), static_cast<Eigen::Index>(tau_p));
    for (std::size_t i = 0; i < assignment.num_ues(); ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      y.col(static_cast<Eigen::Index>(assignment.pilot[i])) +=
          std::sqrt(powers(ii) * static_cast<double>(tau_p)) * H.col(ii);
    }
    out.push_back(std::move(y));
  }
  return out;
}

CMat pilot_book(std::size_t tau_p) {
  const auto n = static_cast<Eigen::Index>(tau_p);
  CMat phi(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index t = 0; t < n; ++t)
      phi(r, t) = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r * t) / static_cast<double>(n));
  return phi;
}

CMat received_pilot_signal(const CMat& H_l, const PilotAssignment& assignment, const RVec& powers, double sigma2,
                           Rng& rng) {
  const CMat phi = pilot_book(assignment.tau_p);
  CMat Y = std::sqrt(sigma2) * complex_normal(rng, H_l.rows(), static_cast<Eigen::Index>(assignment.tau_p));
  for (std::size_t i = 0; i < assignment.num_ues(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    Y += std::sqrt(powers(ii)) * H_l.col(ii) * phi.col(static_cast<Eigen::Index>(assignment.pilot[i])).transpose();
  }
  return Y;
}

CMat despread(const CMat& Y_l, std::size_t tau_p) {
  return Y_l * pilot_book(tau_p).conjugate() / std::sqrt(static_cast<double>(tau_p));
}

std::vector<MmseEstimate> mmse_estimate(const CVec& y, std::span<const CMat> co_pilot_R,
                                        std::span<const double> co_pilot_powers, std::size_t tau_p, double sigma2) {
  if (co_pilot_R.size() != co_pilot_powers.size() || co_pilot_R.empty())
    throw UsageError("mmse_estimate: need one power per correlation matrix");
  const Eigen::Index n = y.size();
  const double tp = static_cast<double>(tau_p);
  CMat psi = sigma2 * CMat::Identity(n, n);
  for (std::size_t i = 0; i < co_pilot_R.size(); ++i) psi += tp * co_pilot_powers[i] * co_pilot_R[i];

  const HermitianSolver solver(hermitian_part(psi));
  const CVec psi_inv_y = solver.solve(y);
  std::vector<MmseEstimate> out;
  out.reserve(co_pilot_R.size());
  for (std::size_t i = 0; i < co_pilot_R.size(); ++i) {
    const CMat& R = co_pilot_R[i];
    const double p = co_pilot_powers[i];
    const CMat psi_inv_r = solver.solve(R);
    MmseEstimate e;
    e.h_hat = std::sqrt(p * tp) * (R * psi_inv_y);
    e.R_hat = hermitian_part(p * tp * R * psi_inv_r);
    e.R_tilde = R - e.R_hat;
    out.push_back(std::move(e));
  }
  return out;
}

CMat colored_noise_cov(std::span<const CMat> R_tilde_at_ap, const RVec& powers, double sigma2) {
  if (R_tilde_at_ap.empty() || static_cast<Eigen::Index>(R_tilde_at_ap.size()) != powers.size())
    throw UsageError("colored_noise_cov: need one error covariance per UE");
  const Eigen::Index n = R_tilde_at_ap.front().rows();
  CMat sigma = sigma2 * CMat::Identity(n, n);
  for (std::size_t i = 0; i < R_tilde_at_ap.size(); ++i) sigma += powers(static_cast<Eigen::Index>(i)) * R_tilde_at_ap[i];
  return hermitian_part(sigma);
}

EstimationStatistics estimation_statistics(const ChannelStatistics& stats, const PilotAssignment& assignment,
                                           const RVec& powers, double sigma2) {
  if (assignment.num_ues() != stats.K || powers.size() != static_cast<Eigen::Index>(stats.K))
    throw UsageError("estimation_statistics: UE count mismatch");
  EstimationStatistics est;
  est.K = stats.K;
  est.L = stats.L;
  est.N = stats.N;
  est.tau_p = assignment.tau_p;
  const auto n = static_cast<Eigen::Index>(stats.N);
  const double tp = static_cast<double>(assignment.tau_p);

  est.gain.resize(est.K * est.L);
  est.R_hat.resize(est.K * est.L);
  est.R_tilde.resize(est.K * est.L);
  est.Psi.resize(est.tau_p * est.L);

  for (std::size_t l = 0; l < est.L; ++l) {
    for (std::size_t t = 0; t < est.tau_p; ++t) {
      CMat psi = sigma2 * CMat::Identity(n, n);
      const auto users = assignment.users_on_pilot(t);
      for (std::size_t i : users) psi += tp * powers(static_cast<Eigen::Index>(i)) * stats.correlation(i, l);
      psi = hermitian_part(psi);
      est.Psi[t * est.L + l] = psi;
      if (users.empty()) continue;
      const HermitianSolver solver(psi);
      for (std::size_t k : users) {
        const double p = powers(static_cast<Eigen::Index>(k));
        const CMat& R = stats.correlation(k, l);
        const CMat psi_inv_r = solver.solve(R);
        // R Psi^{-1} = (Psi^{-1} R)^H for Hermitian R and Psi.
        est.gain[k * est.L + l] = std::sqrt(p * tp) * psi_inv_r.adjoint();
        est.R_hat[k * est.L + l] = hermitian_part(p * tp * R * psi_inv_r);
        est.R_tilde[k * est.L + l] = R - est.R_hat[k * est.L + l];
      }
    }
    std::vector<CMat> r_tilde_at_l;
    r_tilde_at_l.reserve(est.K);
    for (std::size_t k = 0; k < est.K; ++k) r_tilde_at_l.push_back(est.R_tilde[k * est.L + l]);
    est.Sigma.push_back(colored_noise_cov(r_tilde_at_l, powers, sigma2));
  }
  return est;
}

std::vector<CMat> estimate_channels(const EstimationStatistics& est, const PilotAssignment& assignment,
                                    std::span<const CMat> y_pilot) {
  if (y_pilot.size() != est.L) throw UsageError("estimate_channels: need one observation matrix per AP");
  std::vector<CMat> out;
  out.reserve(est.L);
  for (std::size_t l = 0; l < est.L; ++l) {
    CMat h_hat(static_cast<Eigen::Index>(est.N), static_cast<Eigen::Index>(est.K));
    for (std::size_t k = 0; k < est.K; ++k)
      h_hat.col(static_cast<Eigen::Index>(k)) =
          est.gain_at(k, l) * y_pilot[l].col(static_cast<Eigen::Index>(assignment.pilot[k]));
    out.push_back(std::move(h_hat));
  }
  return out;
}

EstimationResult estimate(const ChannelStatistics& stats, const ChannelRealization& channels,
                          const PilotAssignment& assignment, const RVec& powers, double sigma2, Rng& rng) {
  EstimationResult r;
  r.statistics = estimation_statistics(stats, assignment, powers, sigma2);
  r.y_pilot = despreaded_observation(channels, assignment, powers, sigma2, rng);
  r.H_hat = estimate_channels(r.statistics, assignment, r.y_pilot);
  return r;
}

}  // namespace stripe
