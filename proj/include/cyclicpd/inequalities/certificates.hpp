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

#ifndef CYCLICPD_INEQUALITIES_CERTIFICATES_HPP_
#define CYCLICPD_INEQUALITIES_CERTIFICATES_HPP_

#include <map>
#include <string>

#include "cyclicpd/pdcore/matrix.hpp"

namespace cyclicpd::inequalities {

enum class CertificateKind { kBlockPsd, kWzPair };

// Auxiliary matrices from a proof together with the numerical values of the
// properties they are supposed to satisfy. valid is the conjunction of those
// properties at the certificate's tolerance.
struct Certificate {
  CertificateKind kind = CertificateKind::kBlockPsd;
  std::map<std::string, CMatrix> blocks;
  std::map<std::string, double> values;
  bool valid = false;

  const CMatrix& block(const std::string& name) const { return blocks.at(name); }
  double value(const std::string& name) const { return values.at(name); }
};

inline constexpr double kCertificateTol = 1e-9;

// Blocks M_1..M_p with M_i = [[A_i^{-1}, I], [I, A_i]] and M = sum M_i, plus
// "schur", the Schur complement of M with respect to its lower-right block.
// values: min_eig_blocks (smallest over i of min eig M_i / (1 + ||M_i||)),
// min_eig_m, schur_margin (min eig of schur), schur_residual (relative
// distance from sum A_i^{-1} - p^2 (sum A_i)^{-1}).
Certificate build_block_certificate(const CyclicFamily& f, const Tolerance& tol = {});

// W = (B W_1, C W_2, A W_3), Z = (Z_1, Z_2, Z_3) with
// W_1 = (2 B^{1/2} A B^{1/2} + B^2)^{-1/2} = Z_1^{-1} and cyclic analogues.
// values: wz_residual (WZ* vs A+B+C), zz_trace_residual, ww_trace_residual
// (Tr WW* vs Tr N), quotient (|Tr WZ*|^2 / Tr ZZ*, must be >= 1).
Certificate build_wz_certificate(const PDMatrix& a, const PDMatrix& b, const PDMatrix& c,
                                 const Tolerance& tol = {});

// W = (A_1 A_2^{-1/2}, ..., A_p A_1^{-1/2}), Z = (A_2^{1/2}, ..., A_1^{1/2}).
// values: wz_residual, zz_residual (both against sum A_i), ww_trace
// (Tr WW*), ww_trace_residual (against Tr sum A_i^2 A_{i+1}^{-1}).
Certificate build_square_cycle_certificate(const CyclicFamily& f);

}  // namespace cyclicpd::inequalities

#endif  // CYCLICPD_INEQUALITIES_CERTIFICATES_HPP_
