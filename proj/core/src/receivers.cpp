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

#include "stripe/receivers.hpp"

#include <string>
#include <vector>

#include "stripe/linalg.hpp"

namespace stripe {
namespace {

void check_ap(const APLocalData& ap, Eigen::Index K, Eigen::Index T) {
  const Eigen::Index N = ap.antennas();
  if (ap.users() != K) {
    throw UsageError("AP channel estimate has " + std::to_string(ap.users()) + " columns, expected " +
                     std::to_string(K));
  }
  if (ap.noise_cov.rows() != N || ap.noise_cov.cols() != N) {
    throw UsageError("AP noise covariance must be " + std::to_string(N) + " x " + std::to_string(N));
  }
  if (ap.received.rows() != N || ap.received.cols() != T) {
    throw UsageError("AP received samples must be " + std::to_string(N) + " x " + std::to_string(T));
  }
}

// Dimensions shared by all APs; throws on an empty list or a mismatch.
std::pair<Eigen::Index, Eigen::Index> check_aps(std::span<const APLocalData> aps) {
  if (aps.empty()) throw UsageError("receiver needs at least one AP");
  const Eigen::Index K = aps.front().users();
  const Eigen::Index T = aps.front().received.cols();
  for (const auto& ap : aps) check_ap(ap, K, T);
  return {K, T};
}

void check_powers(const RVec& powers, Eigen::Index K) {
  if (powers.size() != K) {
    throw UsageError("expected " + std::to_string(K) + " UE powers, got " + std::to_string(powers.size()));
  }
}

CMat power_matrix(const RVec& powers) { return powers.cast<cdouble>().asDiagonal(); }

// Kalman-form fold shared by OSLP and RLS. `white_noise`, when set,
// replaces every Sigma_l by white_noise * I.
SequentialState kalman_step(const SequentialState& state, const APLocalData& ap,
                            std::optional<double> white_noise) {
  const Eigen::Index K = state.error_cov.rows();
  check_ap(ap, K, state.estimate.cols());
  const CMat& H = ap.channel_estimate;
  const Eigen::Index N = H.rows();

  CMat S = H * state.error_cov * H.adjoint();
  if (white_noise) {
    S.diagonal().array() += *white_noise;
  } else {
    S += ap.noise_cov;
  }
  // T = P H^H S^{-1} = (S^{-1} H P)^H since S and P are Hermitian.
  const CMat T = HermitianSolver(hermitian_part(S)).solve(CMat(H * state.error_cov)).adjoint();
  const CMat TH = T * H;

  SequentialState next = state;
  next.estimate = state.estimate + T * (ap.received - H * state.estimate);
  next.error_cov = hermitian_part(state.error_cov - TH * state.error_cov);
  if (state.track_combiner) {
    const Eigen::Index cols = state.combiner.cols();
    next.combiner.resize(K, cols + N);
    next.combiner.leftCols(cols) = state.combiner - TH * state.combiner;
    next.combiner.rightCols(N) = T;
  }
  ++next.aps_processed;
  return next;
}

SequentialState kalman_initial(const CMat& P0, Eigen::Index T, bool track) {
  const Eigen::Index K = P0.rows();
  SequentialState s;
  s.estimate = CMat::Zero(K, T);
  s.error_cov = P0;
  s.gram = CMat::Zero(K, K);
  s.weighted_mr = CMat::Zero(K, T);
  s.combiner = CMat(K, 0);
  s.track_combiner = track;
  return s;
}

ReceiverOutput finish(Algorithm algorithm, SequentialState&& state) {
  ReceiverOutput out;
  out.algorithm = algorithm;
  out.estimate = std::move(state.estimate);
  out.error_cov = std::move(state.error_cov);
  if (state.track_combiner) out.combiner = std::move(state.combiner);
  return out;
}

}  // namespace

SequentialState initial_state(const RVec& powers, Eigen::Index data_columns, bool track_combiner) {
  return kalman_initial(power_matrix(powers), data_columns, track_combiner);
}

CMat stack_channel_estimates(std::span<const APLocalData> aps) {
  const auto [K, T] = check_aps(aps);
  Eigen::Index rows = 0;
  for (const auto& ap : aps) rows += ap.antennas();
  CMat G(rows, K);
  Eigen::Index r = 0;
  for (const auto& ap : aps) {
    G.middleRows(r, ap.antennas()) = ap.channel_estimate;
    r += ap.antennas();
  }
  return G;
}

CMat stack_noise_covariance(std::span<const APLocalData> aps) {
  check_aps(aps);
  std::vector<CMat> blocks;
  blocks.reserve(aps.size());
  for (const auto& ap : aps) blocks.push_back(ap.noise_cov);
  return block_diagonal(blocks);
}

CMat stack_received(std::span<const APLocalData> aps) {
  const auto [K, T] = check_aps(aps);
  Eigen::Index rows = 0;
  for (const auto& ap : aps) rows += ap.antennas();
  CMat z(rows, T);
  Eigen::Index r = 0;
  for (const auto& ap : aps) {
    z.middleRows(r, ap.antennas()) = ap.received;
    r += ap.antennas();
  }
  return z;
}

ReceiverOutput centralized_lmmse(const CMat& G, const CMat& K_L, const RVec& powers, const CMat& z) {
  const Eigen::Index K = G.cols();
  check_powers(powers, K);
  if (K_L.rows() != G.rows() || K_L.cols() != G.rows()) throw UsageError("K_L must be NL x NL");
  if (z.rows() != G.rows()) throw UsageError("z must have NL rows");
  const CMat Q = power_matrix(powers);
  const CMat Lambda = hermitian_part(K_L + G * Q * G.adjoint());
  const HermitianSolver solver(Lambda);
  const CMat V = solver.solve(CMat(G * Q)).adjoint();

  ReceiverOutput out;
  out.algorithm = Algorithm::kCentralized;
  out.estimate = V * z;
  out.error_cov = hermitian_part(Q - V * G * Q);
  out.combiner = V;
  return out;
}

ReceiverOutput centralized_lmmse(std::span<const APLocalData> aps, const RVec& powers) {
  return centralized_lmmse(stack_channel_estimates(aps), stack_noise_covariance(aps), powers,
                           stack_received(aps));
}

CMat oslp_gain(const CMat& error_cov, const APLocalData& ap) {
  const CMat& H = ap.channel_estimate;
  if (H.cols() != error_cov.rows()) throw UsageError("error covariance does not match the AP's UE count");
  const CMat S = hermitian_part(ap.noise_cov + H * error_cov * H.adjoint());
  return HermitianSolver(S).solve(CMat(H * error_cov)).adjoint();
}

SequentialState oslp_step(const SequentialState& state, const APLocalData& ap) {
  return kalman_step(state, ap, std::nullopt);
}

ReceiverOutput oslp_run(std::span<const APLocalData> aps, const RVec& powers, bool track_combiner) {
  const auto [K, T] = check_aps(aps);
  check_powers(powers, K);
  SequentialState state = initial_state(powers, T, track_combiner);
  for (const auto& ap : aps) state = oslp_step(state, ap);
  return finish(Algorithm::kOslp, std::move(state));
}

SequentialState alt_oslp_step(const SequentialState& state, const APLocalData& ap) {
  const Eigen::Index K = state.gram.rows();
  check_ap(ap, K, state.weighted_mr.cols());
  const CMat& H = ap.channel_estimate;
  const HermitianSolver sigma(hermitian_part(ap.noise_cov));
  // W = H^H Sigma^{-1}.
  const CMat W = sigma.solve(H).adjoint();

  SequentialState next = state;
  next.gram = hermitian_part(state.gram + W * H);
  next.weighted_mr = state.weighted_mr + W * ap.received;
  if (state.track_combiner) {
    const Eigen::Index cols = state.combiner.cols();
    next.combiner.resize(K, cols + H.rows());
    next.combiner.leftCols(cols) = state.combiner;
    next.combiner.rightCols(H.rows()) = W;
  }
  ++next.aps_processed;
  return next;
}

ReceiverOutput alt_oslp_run(std::span<const APLocalData> aps, const RVec& powers, bool track_combiner) {
  const auto [K, T] = check_aps(aps);
  check_powers(powers, K);
  if ((powers.array() <= 0.0).any()) throw UsageError("alternative OSLP needs positive powers");
  SequentialState state = initial_state(powers, T, track_combiner);
  for (const auto& ap : aps) state = alt_oslp_step(state, ap);

  CMat precision = state.gram;
  precision.diagonal() += powers.cwiseInverse().cast<cdouble>();
  const HermitianSolver solver(hermitian_part(precision));

  ReceiverOutput out;
  out.algorithm = Algorithm::kAltOslp;
  out.estimate = solver.solve(state.weighted_mr);
  out.error_cov = hermitian_part(solver.inverse());
  if (track_combiner) out.combiner = solver.solve(state.combiner);
  return out;
}

ReceiverOutput sequential_mr(std::span<const APLocalData> aps, bool track_combiner) {
  const auto [K, T] = check_aps(aps);
  CMat estimate = CMat::Zero(K, T);
  CMat combiner(K, 0);
  for (const auto& ap : aps) {
    estimate += ap.channel_estimate.adjoint() * ap.received;
    if (track_combiner) {
      const Eigen::Index cols = combiner.cols();
      combiner.conservativeResize(K, cols + ap.antennas());
      combiner.rightCols(ap.antennas()) = ap.channel_estimate.adjoint();
    }
  }
  ReceiverOutput out;
  out.algorithm = Algorithm::kSequentialMr;
  out.estimate = std::move(estimate);
  if (track_combiner) out.combiner = std::move(combiner);
  return out;
}

ReceiverOutput n_lmmse_run(std::span<const APLocalData> aps, const RVec& powers) {
  const auto [K, T] = check_aps(aps);
  check_powers(powers, K);
  const CMat Q = power_matrix(powers);
  Eigen::Index total = 0;
  for (const auto& ap : aps) total += ap.antennas();

  ReceiverOutput out;
  out.algorithm = Algorithm::kNLmmse;
  out.estimate.resize(K, T);
  CMat combiner = CMat::Zero(K, total);

  for (Eigen::Index k = 0; k < K; ++k) {
    const double p = powers(k);
    // Previous scalar stage: effective channel g (1 x K), noise variance q,
    // estimate row s (1 x T) and combiner row b^H over the APs seen so far.
    Eigen::RowVectorXcd g;
    double q = 0.0;
    Eigen::RowVectorXcd s;
    Eigen::RowVectorXcd bh;

    for (std::size_t l = 0; l < aps.size(); ++l) {
      const APLocalData& ap = aps[l];
      const Eigen::Index N = ap.antennas();
      const Eigen::Index extra = l == 0 ? 0 : 1;

      CMat H(extra + N, K);
      CMat Sigma = CMat::Zero(extra + N, extra + N);
      CMat y(extra + N, T);
      if (extra) {
        H.row(0) = g;
        Sigma(0, 0) = q;
        y.row(0) = s;
      }
      H.bottomRows(N) = ap.channel_estimate;
      Sigma.bottomRightCorner(N, N) = ap.noise_cov;
      y.bottomRows(N) = ap.received;

      const CMat C = hermitian_part(H * Q * H.adjoint() + Sigma);
      const CVec v = p * HermitianSolver(C).solve(CVec(H.col(k)));

      g = v.adjoint() * H;
      q = (v.adjoint() * Sigma * v)(0, 0).real();
      s = v.adjoint() * y;

      Eigen::RowVectorXcd next(bh.size() + N);
      if (extra) next.head(bh.size()) = std::conj(v(0)) * bh;
      next.tail(N) = v.tail(N).adjoint();
      bh = std::move(next);
    }
    out.estimate.row(k) = s;
    combiner.row(k) = bh;
  }
  out.combiner = std::move(combiner);
  return out;
}

ReceiverOutput rls_run(std::span<const APLocalData> aps, double delta, double noise_power, bool track_combiner) {
  if (!(delta > 0.0)) throw UsageError("RLS regularization must be positive");
  if (!(noise_power >= 0.0)) throw UsageError("RLS noise power must be nonnegative");
  const auto [K, T] = check_aps(aps);
  const CMat P0 = CMat::Identity(K, K) / delta;
  SequentialState state = kalman_initial(P0, T, track_combiner);
  for (const auto& ap : aps) state = kalman_step(state, ap, noise_power);
  return finish(Algorithm::kRls, std::move(state));
}

double default_rls_delta(const RVec& powers) {
  if (powers.size() == 0) throw UsageError("no UE powers");
  const double pmin = powers.minCoeff();
  if (!(pmin > 0.0)) throw UsageError("RLS default regularization needs positive powers");
  return 1e-4 / pmin;
}

const CMat& effective_combiner(const ReceiverOutput& output) {
  if (!output.combiner) {
    throw UsageError(std::string("effective combiner was not tracked for ") +
                     std::string(algorithm_name(output.algorithm)));
  }
  return *output.combiner;
}

ReceiverOutput run_receiver(Algorithm algorithm, std::span<const APLocalData> aps, const RVec& powers,
                            const ReceiverOptions& options) {
  switch (algorithm) {
    case Algorithm::kCentralized:
      return centralized_lmmse(aps, powers);
    case Algorithm::kOslp:
      return oslp_run(aps, powers, options.track_combiner);
    case Algorithm::kAltOslp:
      return alt_oslp_run(aps, powers, options.track_combiner);
    case Algorithm::kNLmmse:
      return n_lmmse_run(aps, powers);
    case Algorithm::kSequentialMr:
      return sequential_mr(aps, options.track_combiner);
    case Algorithm::kRls:
      return rls_run(aps, options.rls_delta.value_or(default_rls_delta(powers)), options.noise_power,
                     options.track_combiner);
  }
  throw UsageError("unknown algorithm");
}

}  // namespace stripe
