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

#include "stripe/channel.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "stripe/linalg.hpp"

namespace stripe {

namespace {

constexpr double kPi = std::numbers::pi;

// Fills a Hermitian Toeplitz matrix from its first column r_0..r_{N-1}.
CMat hermitian_toeplitz(const CVec& first_column) {
  const auto n = first_column.size();
  CMat out(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index c = 0; c < n; ++c) {
      out(m, c) = m >= c ? first_column(m - c) : std::conj(first_column(c - m));
    }
  }
  return out;
}

}  // namespace

CMat local_scattering_correlation(std::size_t N, double nominal_angle_rad, double asd_rad, double beta) {
  if (!(asd_rad > 0.0)) throw DomainError("local_scattering_correlation: asd must be positive");
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double norm = 1.0 / (std::sqrt(2.0 * kPi) * asd_rad);
  const double half_width = 20.0 * asd_rad;

  CVec column(static_cast<Eigen::Index>(N));
  column(0) = beta;
  for (std::size_t d = 1; d < N; ++d) {
    const double lag = static_cast<double>(d);
    auto density = [&](double delta) { return norm * std::exp(-delta * delta / (2.0 * asd_rad * asd_rad)); };
    auto re = [&](double delta) { return std::cos(kPi * lag * std::sin(nominal_angle_rad + delta)) * density(delta); };
    auto im = [&](double delta) { return std::sin(kPi * lag * std::sin(nominal_angle_rad + delta)) * density(delta); };
    const double r = Quad::integrate(re, -half_width, half_width, 15, 1e-12);
    const double i = Quad::integrate(im, -half_width, half_width, 15, 1e-12);
    column(static_cast<Eigen::Index>(d)) = beta * cdouble(r, i);
  }
  return hermitian_toeplitz(column);
}

CMat gaussian_approx_correlation(std::size_t N, double nominal_angle_rad, double asd_rad, double beta) {
  CVec column(static_cast<Eigen::Index>(N));
  const double s = std::sin(nominal_angle_rad);
  const double c = std::cos(nominal_angle_rad);
  for (std::size_t d = 0; d < N; ++d) {
    const double lag = static_cast<double>(d);
    const double spread = asd_rad * kPi * lag * c;
    column(static_cast<Eigen::Index>(d)) =
        beta * std::polar(std::exp(-0.5 * spread * spread), kPi * lag * s);
  }
  column(0) = beta;
  return hermitian_toeplitz(column);
}

CMat spatial_correlation(const NetworkGeometry& geometry, std::size_t k, std::size_t l, const SimConfig& config) {
  const auto ki = static_cast<Eigen::Index>(k), li = static_cast<Eigen::Index>(l);
  const double beta = db_to_linear(pathloss_db(geometry.distance_m(ki, li)));
  const double angle = geometry.nominal_angle_rad(ki, li);
  const double asd = config.asd_deg * kPi / 180.0;
  if (config.correlation == CorrelationModel::kGaussianApprox)
    return gaussian_approx_correlation(config.N, angle, asd, beta);
  return local_scattering_correlation(config.N, angle, asd, beta);
}

ChannelStatistics build_channel_statistics(const NetworkGeometry& geometry, const SimConfig& config) {
  ChannelStatistics stats;
  stats.K = geometry.num_ues();
  stats.L = geometry.num_aps();
  stats.N = config.N;
  stats.beta.resize(static_cast<Eigen::Index>(stats.K), static_cast<Eigen::Index>(stats.L));
  stats.R.reserve(stats.K * stats.L);
  for (std::size_t k = 0; k < stats.K; ++k) {
    for (std::size_t l = 0; l < stats.L; ++l) {
      stats.R.push_back(spatial_correlation(geometry, k, l, config));
      stats.beta(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = stats.R.back()(0, 0).real();
    }
  }
  return stats;
}

ChannelStatistics make_channel_statistics(std::size_t K, std::size_t L, std::vector<CMat> R) {
  if (R.size() != K * L || R.empty()) throw UsageError("make_channel_statistics: expected K * L matrices");
  ChannelStatistics stats;
  stats.K = K;
  stats.L = L;
  stats.N = static_cast<std::size_t>(R.front().rows());
  stats.beta.resize(static_cast<Eigen::Index>(K), static_cast<Eigen::Index>(L));
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t l = 0; l < L; ++l) {
      const CMat& r = R[k * L + l];
      if (r.rows() != static_cast<Eigen::Index>(stats.N) || r.cols() != r.rows())
        throw UsageError("make_channel_statistics: correlation matrices must all be N x N");
      stats.beta(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) =
          r.trace().real() / static_cast<double>(stats.N);
    }
  }
  stats.R = std::move(R);
  return stats;
}

ChannelSampler::ChannelSampler(const ChannelStatistics& stats) : K_(stats.K), L_(stats.L), N_(stats.N) {
  sqrt_r_.reserve(stats.R.size());
  for (const auto& r : stats.R) sqrt_r_.push_back(psd_sqrt(r));
}

ChannelRealization ChannelSampler::draw(Rng& rng, std::size_t block_index) const {
  ChannelRealization out;
  out.block_index = block_index;
  out.H.reserve(L_);
  const auto n = static_cast<Eigen::Index>(N_);
  for (std::size_t l = 0; l < L_; ++l) {
    CMat h(n, static_cast<Eigen::Index>(K_));
    for (std::size_t k = 0; k < K_; ++k) h.col(static_cast<Eigen::Index>(k)) = sqrt_r_[k * L_ + l] * complex_normal(rng, n);
    out.H.push_back(std::move(h));
  }
  return out;
}

ChannelRealization draw_channels(const ChannelStatistics& stats, Rng& rng, std::size_t block_index) {
  return ChannelSampler(stats).draw(rng, block_index);
}

}  // namespace stripe
