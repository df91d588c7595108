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

#include "stripe/rng.hpp"

#include <cmath>
#include <vector>

namespace stripe {

Rng make_stream(std::uint64_t seed, StreamTag tag, std::initializer_list<std::uint64_t> indices) {
  std::vector<std::uint32_t> words;
  auto push64 = [&words](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push64(seed);
  push64(static_cast<std::uint64_t>(tag));
  for (auto i : indices) push64(i);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

CVec complex_normal(Rng& rng, Eigen::Index n) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  CVec out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    out(i) = cdouble(re, im);
  }
  return out;
}

CMat complex_normal(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  CMat out(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      out(i, j) = cdouble(re, im);
    }
  }
  return out;
}

}  // namespace stripe
