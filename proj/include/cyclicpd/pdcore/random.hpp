// Copyright 2026 The cyclicpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLICPD_PDCORE_RANDOM_HPP_
#define CYCLICPD_PDCORE_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

#include "cyclicpd/pdcore/matrix.hpp"

namespace cyclicpd {

// A deterministic random stream. Streams for independent trials are derived
// from a master seed and an index path by hashing, so the draws of a trial
// depend only on (master_seed, path) and never on scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream derive(std::uint64_t master_seed, std::initializer_list<std::uint64_t> path);

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

inline constexpr double kDefaultRidge = 1e-3;
inline constexpr double kDefaultConditionCap = 1e8;

// m x n matrix of independent standard normals (complex: independent real
// and imaginary parts, each N(0, 1)).
CMatrix random_matrix(int rows, int cols, RngStream& rng, Field field);

// G G* + ridge I with G = random_matrix(n, n). Draws whose condition number
// exceeds condition_cap are discarded and redrawn from the same stream.
PDMatrix random_pd(int n, RngStream& rng, Field field, double ridge = kDefaultRidge,
                   double condition_cap = kDefaultConditionCap);

CyclicFamily random_family(int p, int n, RngStream& rng, Field field,
                           double ridge = kDefaultRidge);

}  // namespace cyclicpd

#endif  // CYCLICPD_PDCORE_RANDOM_HPP_
