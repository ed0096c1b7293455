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

#ifndef CYCLICPD_INEQUALITIES_CHECKS_HPP_
#define CYCLICPD_INEQUALITIES_CHECKS_HPP_

#include "cyclicpd/inequalities/report.hpp"
#include "cyclicpd/pdcore/matrix.hpp"

namespace cyclicpd::inequalities {

// Each checker evaluates one matrix inequality on concrete operands and
// returns a CheckReport. Unless noted, every checker is an unconditional
// theorem: holds == false on valid input means a numerical or logic bug.
//
// Detail keys are fixed per check and listed next to each declaration.

// 0 <= Tr(AB) <= Tr(A) Tr(B) for PSD A, B.
// detail: trace_ab, trace_a, trace_b, lower_margin, upper_margin.
CheckReport check_trace_product(const HermMatrix& a, const HermMatrix& b, const Tolerance& tol = {});

// |Tr(X*Y)|^2 <= Tr(X* A X) Tr(Y* A^{-1} Y), X, Y m x k, A m x m PD.
// detail: trace_xy_abs2, trace_xax, trace_yainvy.
CheckReport check_weighted_cs(const CMatrix& x, const CMatrix& y, const PDMatrix& a,
                              const Tolerance& tol = {});

// |Tr(AB*)|^2 <= Tr(AA*) Tr(BB*).
// detail: trace_abstar_abs2, trace_aastar, trace_bbstar.
CheckReport check_cs_trace(const CMatrix& a, const CMatrix& b, const Tolerance& tol = {});

// Every eigenvalue of (A - B)(B^{-1} - A^{-1}) is >= 0, evaluated as
// mu + 1/mu - 2 over the (real, positive) spectrum mu of A B^{-1}.
// detail: direct_eigenvalues, direct_max_abs_imag, path_discrepancy.
CheckReport check_eigineq1(const PDMatrix& a, const PDMatrix& b, const Tolerance& tol = {});

// sum A_i^{-1} >= p^2 (sum A_i)^{-1} in the Loewner order.
// holds also requires the block certificate to be valid.
// detail: loewner_margin, schur_margin, schur_residual, block_psd.
CheckReport check_harmonic_loewner(const CyclicFamily& f, const Tolerance& tol = {});

// Every eigenvalue of (sum A_i)(sum A_i^{-1}) is >= p^2.
// detail: min_eigenvalue, max_eigenvalue.
CheckReport check_product_sum_eigs(const CyclicFamily& f, const Tolerance& tol = {});

// Eigenvalues of A(B+C)^{-1} + B(C+A)^{-1} + C(A+B)^{-1} are >= 3/2.
// detail: as check_nesbitt_k.
CheckReport check_nesbitt(const PDMatrix& a, const PDMatrix& b, const PDMatrix& c,
                          const Tolerance& tol = {});

// Eigenvalues of sum_i A_i (S - A_i)^{-1}, S = sum A_i, are >= k/(k-1),
// k = p >= 2. Spectrum comes from the reduction M = S sum (S - A_i)^{-1} - kI.
// Throws SingularDenominator when some S - A_i is not PD (always for k = 1).
// detail: bound, identity_discrepancy, direct_min_real, direct_max_abs_imag.
CheckReport check_nesbitt_k(const CyclicFamily& f, const Tolerance& tol = {});

// Tr sum A_i (A_{i+1} + A_{i+2})^{-1}, cyclic indices, p >= 3.
double eval_Fp(const CyclicFamily& f);

// Scalar Shapiro inequality holds for these p (and fails for all others).
bool scalar_shapiro_holds(int p);

// F_p >= p n / 2. Conditional: a false verdict is a counterexample event.
// detail: fp, bound, scalar_inequality_holds.
CheckReport check_shapiro_trace(const CyclicFamily& f, const Tolerance& tol = {});

// F_4 >= 2n through the decomposition M, N, P of the four-term sum:
// (i) N + P = 4I, (ii) Tr(M+P) >= 4n, (iii) Tr(M+N) >= 4n, (iv) Tr M >= 2n.
// detail: trace_m, trace_n, trace_p, n_plus_p_residual, margin_m_plus_p,
// margin_m_plus_n, margin_m.
CheckReport check_s4_decomposition(const PDMatrix& a, const PDMatrix& b, const PDMatrix& c,
                                   const PDMatrix& d, const Tolerance& tol = {});

// F(A_1..A_p, A_1, A_2) == F(A_1..A_p) + n (exact identity).
// detail: fp, fp_extended, relative_residual.
CheckReport check_shapiro_extension(const CyclicFamily& f, const Tolerance& tol = {});

// F(A_1..A_p) + F(A_p..A_1) >= p n.
// detail: forward, reverse.
CheckReport check_bidirectional(const CyclicFamily& f, const Tolerance& tol = {});

// Eigenvalues of the forward plus backward four-term sums are >= 4.
// detail: max_abs_imag, effectively_real, reduced_min, reduction_discrepancy.
CheckReport check_bidirectional_eig4(const PDMatrix& a1, const PDMatrix& a2, const PDMatrix& a3,
                                     const PDMatrix& a4, const Tolerance& tol = {});

// With M = A(2A+B)^{-1} + B(2B+C)^{-1} + C(2C+A)^{-1} and N the
// complementary sum: (i) 2M + N = 3I, (ii) Tr N >= 1, (iii) Tr M <= (3n-1)/2.
// detail: trace_m, trace_n, two_m_plus_n_residual, margin_trace_n, margin_trace_m,
// wz_residual, quotient.
CheckReport check_upper_bound_2ab(const PDMatrix& a, const PDMatrix& b, const PDMatrix& c,
                                  const Tolerance& tol = {});

// Tr(A_1^2 A_2^{-1} + ... + A_p^2 A_1^{-1}) >= Tr(A_1 + ... + A_p), p >= 1.
// detail: lhs_trace, rhs_trace, wz_residual, zz_residual, ww_trace_residual.
CheckReport check_square_cycle(const CyclicFamily& f, const Tolerance& tol = {});

// Forward cyclic sum matrix sum_i A_i (A_{i+1} + A_{i+2})^{-1}.
CMatrix cyclic_sum_matrix(const CyclicFamily& f);

}  // namespace cyclicpd::inequalities

#endif  // CYCLICPD_INEQUALITIES_CHECKS_HPP_
