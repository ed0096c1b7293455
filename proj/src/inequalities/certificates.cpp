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

#include "cyclicpd/inequalities/certificates.hpp"

#include <algorithm>
#include <cmath>

#include "cyclicpd/pdcore/functions.hpp"
#include "cyclicpd/pdcore/spectrum.hpp"
#include "internal.hpp"

namespace cyclicpd::inequalities {

using internal::eye;

Certificate build_block_certificate(const CyclicFamily& f, const Tolerance& tol) {
  const int n = f.dim();
  const int p = f.p();
  Certificate cert;
  cert.kind = CertificateKind::kBlockPsd;

  CMatrix total = CMatrix::Zero(2 * n, 2 * n);
  CMatrix inverse_sum = CMatrix::Zero(n, n);
  bool blocks_psd = true;
  double worst_block = std::numeric_limits<double>::infinity();
  for (int i = 0; i < p; ++i) {
    const CMatrix inv = inverse_pd(f[i]).entries();
    CMatrix block(2 * n, 2 * n);
    block << inv, eye(n), eye(n), f[i].entries();
    const double lo = eig_herm(HermMatrix::symmetrize(block)).min_real();
    const double norm = block.norm();
    blocks_psd = blocks_psd && lo >= -tol.slack(norm);
    worst_block = std::min(worst_block, lo / (1.0 + norm));
    total += block;
    inverse_sum += inv;
    cert.blocks["M_" + std::to_string(i + 1)] = std::move(block);
  }
  const double total_lo = eig_herm(HermMatrix::symmetrize(total)).min_real();
  const bool total_psd = total_lo >= -tol.slack(total.norm());

  const CMatrix upper_left = total.topLeftCorner(n, n);
  const CMatrix upper_right = total.topRightCorner(n, n);
  const CMatrix lower_left = total.bottomLeftCorner(n, n);
  const CMatrix lower_right = total.bottomRightCorner(n, n);
  const CMatrix schur = upper_left - upper_right * left_divide(lower_right, lower_left);

  const PDMatrix s = internal::as_pd(sum(f), tol);
  const CMatrix direct = inverse_sum - static_cast<double>(p) * p * inverse_pd(s).entries();
  const double residual = internal::relative((schur - direct).norm(), direct.norm() + inverse_sum.norm());
  const HermMatrix schur_h = HermMatrix::symmetrize(schur);
  const double schur_margin = eig_herm(schur_h).min_real();

  cert.blocks["M"] = total;
  cert.blocks["schur"] = schur_h.entries();
  cert.values["min_eig_blocks"] = worst_block;
  cert.values["min_eig_m"] = total_lo;
  cert.values["schur_margin"] = schur_margin;
  cert.values["schur_residual"] = residual;
  cert.valid = blocks_psd && total_psd && residual <= kCertificateTol &&
               schur_margin >= -tol.slack(schur_h.norm());
  return cert;
}

namespace {

CMatrix hstack(std::span<const CMatrix> blocks) {
  const Eigen::Index rows = blocks.front().rows();
  Eigen::Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  CMatrix out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

}  // namespace

Certificate build_wz_certificate(const PDMatrix& a, const PDMatrix& b, const PDMatrix& c,
                                 const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "build_wz_certificate");
  require_same_dim(a.dim(), c.dim(), "build_wz_certificate");
  Certificate cert;
  cert.kind = CertificateKind::kWzPair;

  // Pairs (U, V) for W_k = (2 U^{1/2} V U^{1/2} + U^2)^{-1/2}: (B, A), (C, B), (A, C).
  const std::array<const PDMatrix*, 3> outer{&b, &c, &a};
  const std::array<const PDMatrix*, 3> inner{&a, &b, &c};
  std::vector<CMatrix> w_blocks;
  std::vector<CMatrix> z_blocks;
  for (std::size_t k = 0; k < 3; ++k) {
    const CMatrix& u = outer[k]->entries();
    const CMatrix root = sqrt_pd(*outer[k]).entries();
    const PDMatrix h = internal::as_pd(2.0 * root * inner[k]->entries() * root + u * u, tol);
    const CMatrix wk = inv_sqrt_pd(h).entries();
    const CMatrix zk = sqrt_pd(h).entries();
    const std::string idx = std::to_string(k + 1);
    cert.blocks["W_" + idx] = wk;
    cert.blocks["Z_" + idx] = zk;
    w_blocks.push_back(u * wk);
    z_blocks.push_back(zk);
  }
  const CMatrix w = hstack(w_blocks);
  const CMatrix z = hstack(z_blocks);
  cert.blocks["W"] = w;
  cert.blocks["Z"] = z;

  const CMatrix& ea = a.entries();
  const CMatrix& eb = b.entries();
  const CMatrix& ec = c.entries();
  const CMatrix s = ea + eb + ec;
  const CMatrix wz = w * z.adjoint();
  const double wz_residual = internal::relative((wz - s).norm(), s.norm());

  const double zz_trace = (z * z.adjoint()).trace().real();
  const double zz_expected =
      (ea * ea + eb * eb + ec * ec + 2.0 * (ea * eb + eb * ec + ec * ea)).trace().real();
  const double zz_residual = std::abs(zz_trace - zz_expected) / (1.0 + std::abs(zz_expected));

  const double ww_trace = (w * w.adjoint()).trace().real();
  const double trace_n = (right_divide(eb, 2.0 * ea + eb) + right_divide(ec, 2.0 * eb + ec) +
                          right_divide(ea, 2.0 * ec + ea))
                             .trace()
                             .real();
  const double ww_residual = std::abs(ww_trace - trace_n) / (1.0 + std::abs(trace_n));

  const double quotient = std::norm(wz.trace()) / zz_trace;

  cert.values["wz_residual"] = wz_residual;
  cert.values["zz_trace_residual"] = zz_residual;
  cert.values["ww_trace_residual"] = ww_residual;
  cert.values["ww_trace"] = ww_trace;
  cert.values["quotient"] = quotient;
  cert.valid = wz_residual <= kCertificateTol && zz_residual <= kCertificateTol &&
               ww_residual <= kCertificateTol && quotient >= 1.0 - tol.slack(quotient);
  return cert;
}

Certificate build_square_cycle_certificate(const CyclicFamily& f) {
  const int p = f.p();
  Certificate cert;
  cert.kind = CertificateKind::kWzPair;
  std::vector<CMatrix> w_blocks;
  std::vector<CMatrix> z_blocks;
  double lhs = 0.0;
  for (int i = 0; i < p; ++i) {
    const PDMatrix& next = f[i + 1];
    const CMatrix& ai = f[i].entries();
    w_blocks.push_back(ai * inv_sqrt_pd(next).entries());
    z_blocks.push_back(sqrt_pd(next).entries());
    lhs += trace_right_divide(ai * ai, next.entries()).real();
  }
  const CMatrix w = hstack(w_blocks);
  const CMatrix z = hstack(z_blocks);
  const CMatrix s = sum(f);
  const double wz_residual = internal::relative((w * z.adjoint() - s).norm(), s.norm());
  const double zz_residual = internal::relative((z * z.adjoint() - s).norm(), s.norm());
  const double ww_trace = (w * w.adjoint()).trace().real();
  const double ww_residual = std::abs(ww_trace - lhs) / (1.0 + std::abs(lhs));

  cert.blocks["W"] = w;
  cert.blocks["Z"] = z;
  cert.values["wz_residual"] = wz_residual;
  cert.values["zz_residual"] = zz_residual;
  cert.values["ww_trace"] = ww_trace;
  cert.values["ww_trace_residual"] = ww_residual;
  cert.valid = wz_residual <= kCertificateTol && zz_residual <= kCertificateTol &&
               ww_residual <= kCertificateTol;
  return cert;
}

}  // namespace cyclicpd::inequalities
