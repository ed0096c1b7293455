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

#include "cyclicpd/search/objective.hpp"

#include <cmath>
#include <limits>

#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/pdcore/errors.hpp"

namespace cyclicpd::search {

namespace {

void require_factors(std::span<const RMatrix> factors) {
  if (factors.size() < 3) throw Error(ErrorCode::kInvalidArgument, "the cyclic sum needs p >= 3");
  const Eigen::Index n = factors.front().rows();
  for (const auto& l : factors) {
    if (l.rows() != n || l.cols() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "factors must be square and equal-sized");
    }
  }
}

std::vector<RMatrix> build_matrices(std::span<const RMatrix> factors, double ridge) {
  std::vector<RMatrix> out;
  out.reserve(factors.size());
  for (const auto& l : factors) out.push_back(factor_to_matrix(l, ridge));
  return out;
}

}  // namespace

double shapiro_margin(const CyclicFamily& f) {
  return inequalities::eval_Fp(f) - 0.5 * f.p() * f.dim();
}

RMatrix factor_to_matrix(const RMatrix& factor, double ridge) {
  const RMatrix l = factor.triangularView<Eigen::Lower>();
  RMatrix a = l * l.transpose();
  a.diagonal().array() += ridge;
  return 0.5 * (a + a.transpose());
}

CyclicFamily factors_to_family(std::span<const RMatrix> factors, double ridge) {
  std::vector<PDMatrix> members;
  members.reserve(factors.size());
  for (const auto& l : factors) members.push_back(make_pd(factor_to_matrix(l, ridge)));
  return CyclicFamily(std::move(members));
}

double margin_from_factors(std::span<const RMatrix> factors, double ridge) {
  require_factors(factors);
  const int p = static_cast<int>(factors.size());
  const auto n = factors.front().rows();
  const std::vector<RMatrix> a = build_matrices(factors, ridge);
  double total = 0.0;
  for (int i = 0; i < p; ++i) {
    const RMatrix s = a[static_cast<std::size_t>((i + 1) % p)] + a[static_cast<std::size_t>((i + 2) % p)];
    Eigen::LLT<RMatrix> llt(s);
    if (llt.info() != Eigen::Success) return std::numeric_limits<double>::infinity();
    total += llt.solve(a[static_cast<std::size_t>(i)]).trace();
  }
  if (!std::isfinite(total)) return std::numeric_limits<double>::infinity();
  return total - 0.5 * p * static_cast<double>(n);
}

std::vector<RMatrix> margin_gradient(std::span<const RMatrix> factors, double ridge) {
  require_factors(factors);
  const int p = static_cast<int>(factors.size());
  const auto n = factors.front().rows();
  const std::vector<RMatrix> a = build_matrices(factors, ridge);
  const RMatrix eye = RMatrix::Identity(n, n);
  auto idx = [p](int i) { return static_cast<std::size_t>(((i % p) + p) % p); };

  std::vector<RMatrix> s_inv(static_cast<std::size_t>(p));
  std::vector<RMatrix> k(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) {
    const RMatrix s = a[idx(j + 1)] + a[idx(j + 2)];
    Eigen::LLT<RMatrix> llt(s);
    if (llt.info() != Eigen::Success) {
      throw Error(ErrorCode::kIllConditioned, "denominator is not positive definite");
    }
    s_inv[idx(j)] = llt.solve(eye);
    k[idx(j)] = s_inv[idx(j)] * a[idx(j)] * s_inv[idx(j)];
  }

  std::vector<RMatrix> grads;
  grads.reserve(factors.size());
  for (int i = 0; i < p; ++i) {
    const RMatrix g = s_inv[idx(i)] - k[idx(i - 1)] - k[idx(i - 2)];
    const RMatrix l = factors[idx(i)].triangularView<Eigen::Lower>();
    const RMatrix gl = (g + g.transpose()) * l;
    grads.push_back(gl.triangularView<Eigen::Lower>());
  }
  return grads;
}

CyclicFamily diagonal_embed(std::span<const double> scalars, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be at least 1");
  if (scalars.empty()) throw Error(ErrorCode::kInvalidArgument, "no scalars to embed");
  std::vector<PDMatrix> members;
  members.reserve(scalars.size());
  for (double s : scalars) {
    if (!(s > 0.0)) throw Error(ErrorCode::kInvalidArgument, "diagonal_embed needs positive scalars");
    members.push_back(make_pd(RMatrix(s * RMatrix::Identity(n, n))));
  }
  return CyclicFamily(std::move(members));
}

}  // namespace cyclicpd::search
