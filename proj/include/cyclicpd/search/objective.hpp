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

#ifndef CYCLICPD_SEARCH_OBJECTIVE_HPP_
#define CYCLICPD_SEARCH_OBJECTIVE_HPP_

#include <span>
#include <vector>

#include "cyclicpd/pdcore/matrix.hpp"

namespace cyclicpd::search {

// F_p(F) - p n / 2. Negative values are counterexamples to F_p >= p n / 2.
double shapiro_margin(const CyclicFamily& f);

// The search parameterization: A_i = L_i L_i^T + ridge I for real lower
// triangular L_i. Entries above the diagonal are ignored.
RMatrix factor_to_matrix(const RMatrix& factor, double ridge);
CyclicFamily factors_to_family(std::span<const RMatrix> factors, double ridge);

// shapiro_margin of the parameterized family, computed in real arithmetic.
// Returns +infinity if a denominator fails to factor.
double margin_from_factors(std::span<const RMatrix> factors, double ridge);

// Exact gradient of margin_from_factors with respect to the lower-triangular
// entries of each factor (upper entries of the result are zero). Uses
//   d Tr(A S^{-1}) = Tr(S^{-1} dA) - Tr(S^{-1} A S^{-1} dS),
// so with G_i = S_i^{-1} - K_{i-1} - K_{i-2}, K_j = S_j^{-1} A_j S_j^{-1},
// the factor gradient is lower(2 G_i L_i).
std::vector<RMatrix> margin_gradient(std::span<const RMatrix> factors, double ridge);

// Family (a_1 I_n, ..., a_p I_n). Throws InvalidArgument for a_i <= 0.
CyclicFamily diagonal_embed(std::span<const double> scalars, int n);

}  // namespace cyclicpd::search

#endif  // CYCLICPD_SEARCH_OBJECTIVE_HPP_
