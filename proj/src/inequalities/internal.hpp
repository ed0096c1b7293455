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

#ifndef CYCLICPD_SRC_INEQUALITIES_INTERNAL_HPP_
#define CYCLICPD_SRC_INEQUALITIES_INTERNAL_HPP_

#include <vector>

#include "cyclicpd/pdcore/matrix.hpp"
#include "cyclicpd/pdcore/spectrum.hpp"

namespace cyclicpd::inequalities::internal {

inline CMatrix eye(int n) { return CMatrix::Identity(n, n); }

// Sums and other combinations that are PD by construction.
PDMatrix as_pd(const CMatrix& m, const Tolerance& tol);

// ||diff||_F / (1 + scale).
inline double relative(double residual, double scale) { return residual / (1.0 + scale); }

std::vector<Complex> to_complex(const std::vector<double>& values);

// Sorted real parts of two spectra compared elementwise, relative to the
// larger magnitude.
double spectrum_discrepancy(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace cyclicpd::inequalities::internal

#endif  // CYCLICPD_SRC_INEQUALITIES_INTERNAL_HPP_
