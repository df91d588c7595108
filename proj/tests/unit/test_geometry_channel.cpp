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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "stripe/channel.hpp"
#include "stripe/geometry.hpp"
#include "stripe/linalg.hpp"
#include "stripe/rng.hpp"

using namespace stripe;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;
}

TEST_SUITE("geometry_channel") {
  TEST_CASE("pathloss at reference distances") {
    CHECK(pathloss_db(1.0) == doctest::Approx(-30.5).epsilon(1e-12));
    CHECK(pathloss_db(10.0) == doctest::Approx(-67.2).epsilon(1e-12));
    CHECK(pathloss_db(100.0) == doctest::Approx(-103.9).epsilon(1e-12));
    CHECK_THROWS_AS(pathloss_db(0.0), DomainError);
    CHECK_THROWS_AS(pathloss_db(-3.0), DomainError);
  }

  TEST_CASE("four APs on a 500 m loop sit 125 m apart") {
    const auto aps = stripe_ap_positions(4, 125.0, 500.0);
    REQUIRE(aps.size() == 4);
    CHECK(aps[0].x == 0.0);
    CHECK(aps[0].y == 0.0);
    CHECK(aps[1].x == doctest::Approx(125.0));
    CHECK(aps[1].y == doctest::Approx(0.0));
    CHECK(aps[2].x == doctest::Approx(125.0));
    CHECK(aps[2].y == doctest::Approx(125.0));
    CHECK(aps[3].x == doctest::Approx(0.0));
    CHECK(aps[3].y == doctest::Approx(125.0));
  }

  TEST_CASE("equidistant arc spacing for any L") {
    for (std::size_t L : {1u, 3u, 7u, 24u, 60u}) {
      const auto aps = stripe_ap_positions(L, 125.0, 500.0);
      const double spacing = 500.0 / static_cast<double>(L);
      for (std::size_t l = 0; l < L; ++l) {
        const Point2 expect = perimeter_point(spacing * static_cast<double>(l), 125.0);
        CHECK(aps[l].x == doctest::Approx(expect.x));
        CHECK(aps[l].y == doctest::Approx(expect.y));
      }
    }
  }

  TEST_CASE("UE directly below an AP is at the height difference") {
    const auto g = make_geometry({{30.0, 0.0}}, {{30.0, 0.0}}, 5.0);
    CHECK(g.distance_m(0, 0) == doctest::Approx(5.0));
  }

  TEST_CASE("distance includes the vertical offset") {
    const auto g = make_geometry({{0.0, 0.0}}, {{3.0, 4.0}}, 12.0);
    CHECK(g.distance_m(0, 0) == doctest::Approx(13.0));
    CHECK(g.nominal_angle_rad(0, 0) == doctest::Approx(std::atan2(4.0, 3.0)));
  }

  TEST_CASE("geometry is a pure function of the seed") {
    SimConfig c;
    Rng a = make_stream(5, StreamTag::kGeometry, {0});
    Rng b = make_stream(5, StreamTag::kGeometry, {0});
    const auto ga = build_geometry(c, a);
    const auto gb = build_geometry(c, b);
    REQUIRE(ga.num_ues() == gb.num_ues());
    for (std::size_t k = 0; k < ga.num_ues(); ++k) {
      CHECK(ga.ue_positions[k].x == gb.ue_positions[k].x);
      CHECK(ga.ue_positions[k].y == gb.ue_positions[k].y);
    }
    CHECK(ga.distance_m == gb.distance_m);
  }

  TEST_CASE("UEs fall inside the centered box and all distances are positive") {
    SimConfig c;
    c.K = 200;
    Rng rng = make_stream(9, StreamTag::kGeometry, {1});
    const auto g = build_geometry(c, rng);
    for (const auto& p : g.ue_positions) {
      CHECK(p.x >= 12.5);
      CHECK(p.x <= 112.5);
      CHECK(p.y >= 12.5);
      CHECK(p.y <= 112.5);
    }
    CHECK(g.distance_m.minCoeff() > 0.0);
  }

  TEST_CASE("invalid geometry config is rejected") {
    SimConfig c;
    c.stripe_length_m = 400.0;
    Rng rng = make_stream(1, StreamTag::kGeometry, {0});
    CHECK_THROWS_AS(build_geometry(c, rng), ConfigError);
  }

  TEST_CASE("single antenna correlation is the scalar gain") {
    const CMat R = local_scattering_correlation(1, 0.3, 15 * kDeg, 2.5e-7);
    REQUIRE(R.rows() == 1);
    CHECK(R(0, 0).real() == 2.5e-7);
    CHECK(R(0, 0).imag() == 0.0);
  }

  TEST_CASE("vanishing angular spread gives a rank-one matrix of constant modulus") {
    const double beta = 3.0;
    for (const CMat& R : {gaussian_approx_correlation(5, 0.4, 1e-9, beta),
                          local_scattering_correlation(5, 0.4, 1e-7, beta)}) {
      for (Eigen::Index m = 0; m < 5; ++m)
        for (Eigen::Index n = 0; n < 5; ++n) CHECK(std::abs(R(m, n)) == doctest::Approx(beta).epsilon(1e-9));
      const RVec eig = hermitian_eigenvalues(R);
      CHECK(eig(4) == doctest::Approx(5 * beta).epsilon(1e-8));
      CHECK(std::abs(eig(3)) < 1e-6 * beta);
    }
  }

  TEST_CASE("local scattering matrix matches an independent quadrature") {
    const CMat R = local_scattering_correlation(4, 30 * kDeg, 15 * kDeg, 1.0);
    const CMat ref = oracle::local_scattering(4, 30 * kDeg, 15 * kDeg, 1.0);
    CHECK((R - ref).cwiseAbs().maxCoeff() < 1e-3);
    CHECK((R - ref).cwiseAbs().maxCoeff() < 1e-9);
  }

  TEST_CASE("closed form agrees with quadrature only for small spread") {
    const CMat small = gaussian_approx_correlation(4, 30 * kDeg, 1 * kDeg, 1.0);
    const CMat small_ref = oracle::local_scattering(4, 30 * kDeg, 1 * kDeg, 1.0);
    CHECK((small - small_ref).cwiseAbs().maxCoeff() < 1e-3);
    const CMat wide = gaussian_approx_correlation(4, 30 * kDeg, 15 * kDeg, 1.0);
    const CMat wide_ref = oracle::local_scattering(4, 30 * kDeg, 15 * kDeg, 1.0);
    CHECK((wide - wide_ref).cwiseAbs().maxCoeff() > 1e-3);
  }

  TEST_CASE("generated statistics: trace, Hermitian and PSD") {
    SimConfig c;
    c.K = 6;
    c.L = 8;
    for (CorrelationModel model : {CorrelationModel::kLocalScattering, CorrelationModel::kGaussianApprox}) {
      c.correlation = model;
      Rng rng = make_stream(3, StreamTag::kGeometry, {0});
      const auto stats = build_channel_statistics(build_geometry(c, rng), c);
      for (std::size_t k = 0; k < stats.K; ++k) {
        for (std::size_t l = 0; l < stats.L; ++l) {
          const CMat& R = stats.correlation(k, l);
          const double beta = stats.beta(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
          CHECK(R.trace().real() / static_cast<double>(c.N) == doctest::Approx(beta).epsilon(1e-15));
          CHECK(is_hermitian(R, 1e-12));
          const RVec eig = hermitian_eigenvalues(R);
          CHECK(eig.minCoeff() >= -1e-10 * eig.maxCoeff());
        }
      }
    }
  }

  TEST_CASE("zero correlation draws zero channels") {
    const auto stats = make_channel_statistics(2, 3, std::vector<CMat>(6, CMat::Zero(4, 4)));
    Rng rng = make_stream(1, StreamTag::kFading, {0});
    const auto real = draw_channels(stats, rng);
    for (const auto& H : real.H) CHECK(H.norm() == 0.0);
  }

  TEST_CASE("identity correlation: sample covariance converges") {
    const int N = 3;
    const auto stats = make_channel_statistics(1, 1, {CMat::Identity(N, N)});
    const ChannelSampler sampler(stats);
    Rng rng = make_stream(2, StreamTag::kFading, {0});
    const int n = 100000;
    CMat X(N, n);
    for (int i = 0; i < n; ++i) X.col(i) = sampler.draw(rng).H[0].col(0);
    CHECK((oracle::sample_covariance(X) - CMat::Identity(N, N)).norm() < 0.05);
  }

  TEST_CASE("correlated draws: Frobenius error within c / sqrt(n)") {
    const CMat R = local_scattering_correlation(4, 0.7, 10 * kDeg, 2.0);
    const auto stats = make_channel_statistics(1, 1, {R});
    const ChannelSampler sampler(stats);
    Rng rng = make_stream(4, StreamTag::kFading, {0});
    const int n = 100000;
    CMat X(4, n);
    for (int i = 0; i < n; ++i) X.col(i) = sampler.draw(rng).H[0].col(0);
    // E||S - R||_F^2 = tr(R)^2 / n for complex Gaussian samples; c = 5 tr(R).
    const double c = 5.0 * R.trace().real();
    CHECK((oracle::sample_covariance(X) - R).norm() <= c / std::sqrt(static_cast<double>(n)));
  }

  TEST_CASE("fixed seed gives bit-identical realizations") {
    const CMat R = local_scattering_correlation(2, 0.1, 15 * kDeg, 1.0);
    const auto stats = make_channel_statistics(2, 2, {R, R, R, R});
    Rng a = make_stream(11, StreamTag::kFading, {0, 1});
    Rng b = make_stream(11, StreamTag::kFading, {0, 1});
    const auto ra = draw_channels(stats, a);
    const auto rb = draw_channels(stats, b);
    for (std::size_t l = 0; l < 2; ++l) CHECK(ra.H[l] == rb.H[l]);
    Rng c = make_stream(11, StreamTag::kFading, {0, 2});
    CHECK(draw_channels(stats, c).H[0] != ra.H[0]);
  }

  TEST_CASE("non-PSD input to the sampler is a numeric error") {
    CMat bad = CMat::Identity(2, 2);
    bad(1, 1) = -1.0;
    CHECK_THROWS_AS(ChannelSampler(make_channel_statistics(1, 1, {bad})), NumericError);
  }
}
