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

#ifndef CYCLICPD_PDCORE_FUNCTIONS_HPP_
#define CYCLICPD_PDCORE_FUNCTIONS_HPP_

#include "cyclicpd/pdcore/matrix.hpp"

namespace cyclicpd {

// Principal square root by spectral decomposition. The result satisfies
// ||S*S - A|| <= 1e-10 ||A|| for well-conditioned inputs.
PDMatrix sqrt_pd(const PDMatrix& a);

// A^{-1/2}, from the same spectral decomposition as sqrt_pd.
PDMatrix inv_sqrt_pd(const PDMatrix& a);

// Cholesky inverse followed by one step of iterative refinement. Throws
// IllConditioned when ||A X - I||_F > 1e-10 * max(1, cond(A)).
PDMatrix inverse_pd(const PDMatrix& a);

// X * S^{-1} for Hermitian PD S, via a Cholesky solve (no explicit inverse).
// Throws IllConditioned if the factorization fails.
CMatrix right_divide(const CMatrix& x, const CMatrix& s);
// S^{-1} * X.
CMatrix left_divide(const CMatrix& s, const CMatrix& x);
// Tr(X * S^{-1}).
Complex trace_right_divide(const CMatrix& x, const CMatrix& s);

struct LoewnerResult {
  bool holds = false;
  double margin = 0.0;  // smallest eigenvalue of A - B
  double slack = 0.0;
};

// A >= B in the Loewner order: holds iff min eig(A - B) >= -tol.rel (1 + ||A|| + ||B||).
LoewnerResult loewner_geq(const HermMatrix& a, const HermMatrix& b, const Tolerance& tol = {});

}  // namespace cyclicpd

#endif  // CYCLICPD_PDCORE_FUNCTIONS_HPP_
