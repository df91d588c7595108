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

#include <cstdint>
#include <initializer_list>
#include <random>

#include "stripe/types.hpp"

namespace stripe {

using Rng = std::mt19937_64;

// Purpose tags keep streams for different draws of the same (drop, fade)
// independent of each other.
enum class StreamTag : std::uint64_t {
  kGeometry = 1,
  kFading = 2,
  kPilotNoise = 3,
  kData = 4,
  kVerify = 5,
};

// Independent generator for the task identified by `indices`. The same
// (seed, tag, indices) always yields the same stream, whatever thread runs it.
Rng make_stream(std::uint64_t seed, StreamTag tag, std::initializer_list<std::uint64_t> indices);

// n i.i.d. CN(0, 1) samples.
CVec complex_normal(Rng& rng, Eigen::Index n);
CMat complex_normal(Rng& rng, Eigen::Index rows, Eigen::Index cols);

}  // namespace stripe
