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

#include "stripe/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stripe/linalg.hpp"

namespace stripe {
namespace {

void check_system(const CMat& G, const CMat& K_L, const RVec& powers) {
  if (K_L.rows() != G.rows() || K_L.cols() != G.rows()) throw UsageError("K_L must be NL x NL");
  if (powers.size() != G.cols()) throw UsageError("one power per UE expected");
}

}  // namespace

double instantaneous_sinr(const CVec& b, std::size_t k, const CMat& G, const CMat& K_L, const RVec& powers) {
  check_system(G, K_L, powers);
  if (b.size() != G.rows()) throw UsageError("combiner length must be NL");
  if (k >= static_cast<std::size_t>(G.cols())) throw UsageError("UE index out of range");
  if (b.squaredNorm() == 0.0) throw DomainError("SINR of a zero combiner is undefined");
  const auto kk = static_cast<Eigen::Index>(k);
  const Eigen::RowVectorXcd bg = b.adjoint() * G;
  double interference = (b.adjoint() * K_L * b)(0, 0).real();
  for (Eigen::Index i = 0; i < G.cols(); ++i) {
    if (i != kk) interference += powers(i) * std::norm(bg(i));
  }
  return powers(kk) * std::norm(bg(kk)) / interference;
}

RVec combiner_sinr(const CMat& combiner, const CMat& G, const CMat& K_L, const RVec& powers) {
  check_system(G, K_L, powers);
  if (combiner.rows() != G.cols() || combiner.cols() != G.rows()) {
    throw UsageError("combiner must be K x NL");
  }
  const Eigen::Index K = G.cols();
  const CMat BG = combiner * G;
  const RVec noise = (combiner * K_L).cwiseProduct(combiner.conjugate()).rowwise().sum().real();
  RVec out(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    if (combiner.row(k).squaredNorm() == 0.0) throw DomainError("SINR of a zero combiner is undefined");
    double interference = noise(k);
    for (Eigen::Index i = 0; i < K; ++i) {
      if (i != k) interference += powers(i) * std::norm(BG(k, i));
    }
    out(k) = powers(k) * std::norm(BG(k, k)) / interference;
  }
  return out;
}

double max_sinr(std::size_t k, const CMat& G, const CMat& K_L, const RVec& powers) {
  check_system(G, K_L, powers);
  if (k >= static_cast<std::size_t>(G.cols())) throw UsageError("UE index out of range");
  const auto kk = static_cast<Eigen::Index>(k);
  RVec others = powers;
  others(kk) = 0.0;
  const CMat C = hermitian_part(K_L + G * others.cast<cdouble>().asDiagonal() * G.adjoint());
  const CVec h = G.col(kk);
  const CVec x = HermitianSolver(C).solve(h);
  return std::max(0.0, powers(kk) * h.dot(x).real());
}

RVec max_sinr_all(const CMat& G, const CMat& K_L, const RVec& powers) {
  RVec out(G.cols());
  for (Eigen::Index k = 0; k < G.cols(); ++k) out(k) = max_sinr(static_cast<std::size_t>(k), G, K_L, powers);
  return out;
}

CMat lambda_matrix(const CMat& G, const CMat& K_L, const RVec& powers) {
  check_system(G, K_L, powers);
  return hermitian_part(K_L + G * powers.cast<cdouble>().asDiagonal() * G.adjoint());
}

double se_prelog(std::size_t tau_p, std::size_t tau_c) {
  if (tau_c == 0 || tau_p > tau_c) throw DomainError("pilot length must not exceed the coherence block");
  return 1.0 - static_cast<double>(tau_p) / static_cast<double>(tau_c);
}

double achievable_se(std::span<const double> gamma_samples, std::size_t tau_p, std::size_t tau_c) {
  if (gamma_samples.empty()) throw UsageError("SE needs at least one SINR sample");
  const double prelog = se_prelog(tau_p, tau_c);
  double sum = 0.0;
  for (double g : gamma_samples) sum += std::log2(1.0 + g);
  return prelog * sum / static_cast<double>(gamma_samples.size());
}

double mse_of_combiner(const CVec& b, const CVec& h_k, const CMat& lambda, double p_k) {
  if (b.size() != h_k.size() || lambda.rows() != b.size()) throw UsageError("dimension mismatch");
  return p_k - 2.0 * b.dot(h_k).real() * p_k + b.dot(lambda * b).real();
}

RVec combiner_mse(const CMat& combiner, const CMat& G, const CMat& lambda, const RVec& powers) {
  if (combiner.rows() != G.cols() || combiner.cols() != G.rows() || lambda.rows() != G.rows()) {
    throw UsageError("dimension mismatch");
  }
  const CMat BG = combiner * G;
  const RVec quad = (combiner * lambda).cwiseProduct(combiner.conjugate()).rowwise().sum().real();
  RVec out(G.cols());
  for (Eigen::Index k = 0; k < G.cols(); ++k) {
    out(k) = powers(k) - 2.0 * BG(k, k).real() * powers(k) + quad(k);
  }
  return out;
}

double min_mse(const CVec& h_k, const CMat& lambda, double p_k) {
  if (lambda.rows() != h_k.size()) throw UsageError("dimension mismatch");
  const CVec x = HermitianSolver(hermitian_part(lambda)).solve(h_k);
  return p_k - p_k * p_k * h_k.dot(x).real();
}

SinrIncrement sinr_increment_initial(double p_k) {
  SinrIncrement s;
  s.mse = p_k;
  return s;
}

SinrIncrement sinr_increment(const CMat& T, const CMat& H, const CMat& P_prev, std::size_t k, double p_k,
                        const SinrIncrement& previous) {
  const auto kk = static_cast<Eigen::Index>(k);
  if (kk >= P_prev.rows()) throw UsageError("UE index out of range");
  // Only row k of T H P is needed.
  const double alpha = (T.row(kk) * H * P_prev.col(kk))(0, 0).real();
  const double denom = p_k - alpha * (previous.sinr + 1.0);
  if (!(denom > 0.0)) {
    throw NumericError("SINR increment denominator is not positive for UE " + std::to_string(k));
  }
  SinrIncrement s;
  s.alpha = alpha;
  s.mse = previous.mse - alpha;
  s.gamma = alpha * (previous.sinr + 1.0) * (previous.sinr + 1.0) / denom;
  s.sinr = previous.sinr + s.gamma;
  s.zeta = std::log2(1.0 + s.gamma / (1.0 + previous.sinr));
  s.rate = previous.rate + s.zeta;
  return s;
}

std::vector<std::vector<SinrIncrement>> oslp_trace(std::span<const APLocalData> aps, const RVec& powers,
                                               CMat* final_error_cov) {
  if (aps.empty()) throw UsageError("receiver needs at least one AP");
  const Eigen::Index K = powers.size();
  SequentialState state = initial_state(powers, aps.front().received.cols(), false);
  std::vector<SinrIncrement> current(static_cast<std::size_t>(K));
  for (Eigen::Index k = 0; k < K; ++k) current[static_cast<std::size_t>(k)] = sinr_increment_initial(powers(k));

  std::vector<std::vector<SinrIncrement>> trace;
  trace.reserve(aps.size());
  for (const auto& ap : aps) {
    const CMat T = oslp_gain(state.error_cov, ap);
    for (Eigen::Index k = 0; k < K; ++k) {
      auto& c = current[static_cast<std::size_t>(k)];
      c = sinr_increment(T, ap.channel_estimate, state.error_cov, static_cast<std::size_t>(k), powers(k), c);
    }
    trace.push_back(current);
    state = oslp_step(state, ap);
  }
  if (final_error_cov) *final_error_cov = state.error_cov;
  return trace;
}

MetricsRecord evaluate_receiver(const ReceiverOutput& output, std::span<const APLocalData> aps, const RVec& powers) {
  const CMat G = stack_channel_estimates(aps);
  const CMat K_L = stack_noise_covariance(aps);
  const CMat& B = effective_combiner(output);
  MetricsRecord rec;
  rec.sinr = combiner_sinr(B, G, K_L, powers);
  rec.mse = combiner_mse(B, G, lambda_matrix(G, K_L, powers), powers);
  return rec;
}

}  // namespace stripe
