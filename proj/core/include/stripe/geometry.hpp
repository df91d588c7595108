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

#pragma once

#include <cstddef>
#include <vector>

#include "stripe/config.hpp"
#include "stripe/rng.hpp"
#include "stripe/types.hpp"

namespace stripe {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Square area [0, side]^2 with the stripe on its perimeter. APs sit at
// arc positions l * stripe_length / L, l = 0..L-1, measured
// counterclockwise from the south-west corner (0, 0).
struct NetworkGeometry {
  std::vector<Point2> ap_positions;
  std::vector<Point2> ue_positions;
  double height_diff_m = 0.0;
  RMat distance_m;         // K x L, includes the height difference
  RMat nominal_angle_rad;  // K x L, bearing from AP l to UE k in the horizontal plane

  std::size_t num_aps() const { return ap_positions.size(); }
  std::size_t num_ues() const { return ue_positions.size(); }
};

// Point at arc length `s` along the perimeter of [0, side]^2.
Point2 perimeter_point(double s, double side);

std::vector<Point2> stripe_ap_positions(std::size_t L, double area_side_m, double stripe_length_m);

// Fills distances and angles from the given positions.
NetworkGeometry make_geometry(std::vector<Point2> aps, std::vector<Point2> ues, double height_diff_m);

// APs on the stripe, K UEs uniform in the centered ue_box. Validates `config`.
NetworkGeometry build_geometry(const SimConfig& config, Rng& rng);

// -30.5 - 36.7 log10(d / 1 m). Throws DomainError for d <= 0.
double pathloss_db(double d_m);
double db_to_linear(double db);

}  // namespace stripe
