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

#include "stripe/geometry.hpp"

#include <cmath>

namespace stripe {

Point2 perimeter_point(double s, double side) {
  const double perimeter = 4.0 * side;
  s = std::fmod(s, perimeter);
  if (s < 0.0) s += perimeter;
  if (s < side) return {s, 0.0};
  if (s < 2.0 * side) return {side, s - side};
  if (s < 3.0 * side) return {3.0 * side - s, side};
  return {0.0, perimeter - s};
}

std::vector<Point2> stripe_ap_positions(std::size_t L, double area_side_m, double stripe_length_m) {
  std::vector<Point2> aps;
  aps.reserve(L);
  const double spacing = stripe_length_m / static_cast<double>(L);
  for (std::size_t l = 0; l < L; ++l) aps.push_back(perimeter_point(spacing * static_cast<double>(l), area_side_m));
  return aps;
}

NetworkGeometry make_geometry(std::vector<Point2> aps, std::vector<Point2> ues, double height_diff_m) {
  NetworkGeometry g;
  g.ap_positions = std::move(aps);
  g.ue_positions = std::move(ues);
  g.height_diff_m = height_diff_m;
  const auto K = static_cast<Eigen::Index>(g.ue_positions.size());
  const auto L = static_cast<Eigen::Index>(g.ap_positions.size());
  g.distance_m.resize(K, L);
  g.nominal_angle_rad.resize(K, L);
  for (Eigen::Index k = 0; k < K; ++k) {
    for (Eigen::Index l = 0; l < L; ++l) {
      const double dx = g.ue_positions[k].x - g.ap_positions[l].x;
      const double dy = g.ue_positions[k].y - g.ap_positions[l].y;
      g.distance_m(k, l) = std::sqrt(dx * dx + dy * dy + height_diff_m * height_diff_m);
      g.nominal_angle_rad(k, l) = std::atan2(dy, dx);
    }
  }
  return g;
}

NetworkGeometry build_geometry(const SimConfig& config, Rng& rng) {
  validate(config);
  auto aps = stripe_ap_positions(config.L, config.area_side_m, config.stripe_length_m);

  const double lo = 0.5 * (config.area_side_m - config.ue_box_side_m);
  std::uniform_real_distribution<double> coord(lo, lo + config.ue_box_side_m);
  std::vector<Point2> ues;
  ues.reserve(config.K);
  for (std::size_t k = 0; k < config.K; ++k) {
    const double x = coord(rng);
    const double y = coord(rng);
    ues.push_back({x, y});
  }
  return make_geometry(std::move(aps), std::move(ues), config.ap_ue_height_diff_m);
}

double pathloss_db(double d_m) {
  if (!(d_m > 0.0)) throw DomainError("pathloss_db: distance must be positive");
  return -30.5 - 36.7 * std::log10(d_m);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace stripe
