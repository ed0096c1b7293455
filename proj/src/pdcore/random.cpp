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

#include "cyclicpd/pdcore/random.hpp"

#include "cyclicpd/pdcore/errors.hpp"

namespace cyclicpd {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream RngStream::derive(std::uint64_t master_seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(master_seed);
  for (std::uint64_t step : path) h = splitmix64(h ^ splitmix64(step + 0x632be59bd9b4e019ULL));
  return RngStream(h);
}

CMatrix random_matrix(int rows, int cols, RngStream& rng, Field field) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::kInvalidArgument, "matrix shape must be positive");
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = rng.normal();
      const double im = field == Field::kComplex ? rng.normal() : 0.0;
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

PDMatrix random_pd(int n, RngStream& rng, Field field, double ridge, double condition_cap) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be at least 1");
  if (!(ridge > 0.0)) throw Error(ErrorCode::kInvalidArgument, "ridge must be positive");
  constexpr int kMaxDraws = 1000;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    const CMatrix g = random_matrix(n, n, rng, field);
    const CMatrix a = g * g.adjoint() + ridge * CMatrix::Identity(n, n);
    PDMatrix pd = make_pd(HermMatrix::symmetrize(a));
    if (pd.condition() <= condition_cap) return pd;
  }
  throw Error(ErrorCode::kIllConditioned, "no draw met the condition-number cap");
}

CyclicFamily random_family(int p, int n, RngStream& rng, Field field, double ridge) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "family size must be at least 1");
  std::vector<PDMatrix> members;
  members.reserve(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) members.push_back(random_pd(n, rng, field, ridge));
  return CyclicFamily(std::move(members));
}

}  // namespace cyclicpd
