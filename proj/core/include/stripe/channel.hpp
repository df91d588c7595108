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

// Spatial correlation and correlated Rayleigh fading.

#pragma once

#include <cstddef>
#include <vector>

#include "stripe/config.hpp"
#include "stripe/geometry.hpp"
#include "stripe/rng.hpp"
#include "stripe/types.hpp"

namespace stripe {

// Local scattering model for a half-wavelength ULA:
//   [R]_{mn} = beta * E{ exp(j pi (m - n) sin(phi + delta)) },
//   delta ~ N(0, asd^2),
// with the expectation evaluated by adaptive Gauss-Kronrod quadrature over
// |delta| <= 20 asd. The diagonal is exactly beta.
CMat local_scattering_correlation(std::size_t N, double nominal_angle_rad, double asd_rad, double beta);

// Small-angle closed form of the same model:
//   [R]_{mn} = beta exp(j pi (m-n) sin phi) exp(-(asd pi (m-n) cos phi)^2 / 2).
CMat gaussian_approx_correlation(std::size_t N, double nominal_angle_rad, double asd_rad, double beta);

struct ChannelStatistics {
  std::size_t K = 0;
  std::size_t L = 0;
  std::size_t N = 0;
  RMat beta;             // K x L, linear large-scale gain, = tr(R_kl) / N
  std::vector<CMat> R;   // K * L matrices, N x N, index k * L + l

  const CMat& correlation(std::size_t k, std::size_t l) const { return R[k * L + l]; }
  CMat& correlation(std::size_t k, std::size_t l) { return R[k * L + l]; }
};

// R_kl for UE k and AP l of `geometry` under the model chosen in `config`.
CMat spatial_correlation(const NetworkGeometry& geometry, std::size_t k, std::size_t l, const SimConfig& config);

ChannelStatistics build_channel_statistics(const NetworkGeometry& geometry, const SimConfig& config);

// Statistics from explicit matrices; beta_kl is taken as tr(R_kl) / N.
ChannelStatistics make_channel_statistics(std::size_t K, std::size_t L, std::vector<CMat> R);

struct ChannelRealization {
  std::vector<CMat> H;  // per AP, N x K; column k is h_kl
  std::size_t block_index = 0;
};

// Caches R_kl^{1/2} so that repeated blocks cost one matrix-vector product
// per (k, l).
class ChannelSampler {
 public:
  explicit ChannelSampler(const ChannelStatistics& stats);

  ChannelRealization draw(Rng& rng, std::size_t block_index = 0) const;
  const CMat& sqrt_correlation(std::size_t k, std::size_t l) const { return sqrt_r_[k * L_ + l]; }

 private:
  std::size_t K_, L_, N_;
  std::vector<CMat> sqrt_r_;
};

// h_kl = R_kl^{1/2} g, g ~ CN(0, I_N), independent over (k, l).
ChannelRealization draw_channels(const ChannelStatistics& stats, Rng& rng, std::size_t block_index = 0);

}  // namespace stripe
