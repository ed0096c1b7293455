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

#ifndef CYCLICPD_PDCORE_SPECTRUM_HPP_
#define CYCLICPD_PDCORE_SPECTRUM_HPP_

#include <array>
#include <vector>

#include "cyclicpd/pdcore/matrix.hpp"

namespace cyclicpd {

// Eigenvalues sorted by real part, then imaginary part. residual_bound is
// max_j ||M v_j - lambda_j v_j|| / ||M|| over the unit eigenvectors the
// solver produced.
struct Spectrum {
  std::vector<Complex> values;
  double residual_bound = 0.0;

  std::size_t size() const { return values.size(); }
  double min_real() const;
  double max_real() const;
  double max_abs_imag() const;
  double max_abs() const;
  Complex sum() const;
  std::vector<double> real_parts() const;
};

struct HermDecomposition {
  Eigen::VectorXd values;  // ascending
  CMatrix vectors;         // unitary, columns match values
};

// Hermitian eigendecomposition. Real symmetric inputs use a real solver.
// Throws ConvergenceFailure if the solver fails or the residual exceeds 1e-10.
HermDecomposition decompose_herm(const HermMatrix& h);
Spectrum eig_herm(const HermMatrix& h);

// Full complex spectrum of an arbitrary square matrix (Hessenberg reduction
// followed by shifted QR on the complex Schur form).
Spectrum eig_general(const CMatrix& m);

// Roots of the characteristic polynomial of a 2x2 matrix, sorted like Spectrum.
std::array<Complex, 2> eig_2x2_closed_form(const CMatrix& m);

// Spectrum of P*Q through the similar Hermitian matrix Q^{1/2} P Q^{1/2}.
Spectrum eig_pd_product(const PDMatrix& p, const PDMatrix& q);

}  // namespace cyclicpd

#endif  // CYCLICPD_PDCORE_SPECTRUM_HPP_
