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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyclicpd/inequalities/certificates.hpp"
#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/functions.hpp"
#include "cyclicpd/pdcore/spectrum.hpp"
#include "internal.hpp"

namespace cyclicpd::inequalities {

namespace internal {

PDMatrix as_pd(const CMatrix& m, const Tolerance& tol) {
  return make_pd(HermMatrix::symmetrize(m), tol);
}

std::vector<Complex> to_complex(const std::vector<double>& values) {
  std::vector<Complex> out;
  out.reserve(values.size());
  for (double v : values) out.emplace_back(v, 0.0);
  return out;
}

double spectrum_discrepancy(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
    scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
  }
  return worst / (1.0 + scale);
}

}  // namespace internal

using internal::eye;

namespace {

void require_psd(const HermMatrix& m, const Tolerance& tol) {
  const double lo = eig_herm(m).min_real();
  if (lo < -tol.abs) throw NotPositiveDefiniteError(lo);
}

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << what << ": shapes " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x"
       << b.cols() << " differ";
    throw Error(ErrorCode::kShapeMismatch, os.str());
  }
}

// The reduction shared by the Nesbitt checks: denominators D_i are the sum
// of the other members, and M = sum A_i D_i^{-1} = S sum D_i^{-1} - kI.
CheckReport nesbitt_family(std::string name, std::span<const PDMatrix> members,
                           const Tolerance& tol) {
  const int k = static_cast<int>(members.size());
  const int n = members.front().dim();
  CMatrix s = CMatrix::Zero(n, n);
  for (const auto& m : members) s += m.entries();

  CMatrix inverse_sum = CMatrix::Zero(n, n);
  CMatrix direct = CMatrix::Zero(n, n);
  for (int i = 0; i < k; ++i) {
    CMatrix others = CMatrix::Zero(n, n);
    for (int j = 0; j < k; ++j) {
      if (j != i) others += members[static_cast<std::size_t>(j)].entries();
    }
    PDMatrix denom = [&] {
      try {
        return internal::as_pd(others, tol);
      } catch (const NotPositiveDefiniteError& e) {
        throw Error(ErrorCode::kSingularDenominator,
                    "S - A_" + std::to_string(i + 1) + " is not positive definite (" + e.what() + ")");
      }
    }();
    inverse_sum += inverse_pd(denom).entries();
    direct += right_divide(members[static_cast<std::size_t>(i)].entries(), denom.entries());
  }

  const PDMatrix s_pd = internal::as_pd(s, tol);
  const PDMatrix h_pd = internal::as_pd(inverse_sum, tol);
  std::vector<double> eigs = eig_pd_product(s_pd, h_pd).real_parts();
  for (double& e : eigs) e -= k;

  const double bound = static_cast<double>(k) / (k - 1);
  const double margin = eigs.front() - bound;
  const double max_eig = std::max(std::abs(eigs.front()), std::abs(eigs.back()));
  CheckReport r = make_report(std::move(name), n, k, internal::to_complex(eigs), bound, margin,
                              tol.slack(max_eig + bound), tol);

  const CMatrix via_identity = s * inverse_sum - k * eye(n);
  const Spectrum direct_spec = eig_general(direct);
  r.detail["bound"] = bound;
  r.detail["identity_discrepancy"] =
      (via_identity - direct).cwiseAbs().maxCoeff() / (1.0 + direct.cwiseAbs().maxCoeff());
  r.detail["direct_min_real"] = direct_spec.min_real();
  r.detail["direct_max_abs_imag"] = direct_spec.max_abs_imag();
  return r;
}

}  // namespace

CheckReport check_trace_product(const HermMatrix& a, const HermMatrix& b, const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "check_trace_product");
  require_psd(a, tol);
  require_psd(b, tol);
  const double tab = (a.entries() * b.entries()).trace().real();
  const double ta = a.trace();
  const double tb = b.trace();
  const double lower = tab;
  const double upper = ta * tb - tab;
  CheckReport r = make_report("trace_product", a.dim(), 0, {Complex(tab, 0.0)}, ta * tb,
                              std::min(lower, upper), tol.slack(std::abs(ta * tb)), tol);
  r.detail["trace_ab"] = tab;
  r.detail["trace_a"] = ta;
  r.detail["trace_b"] = tb;
  r.detail["lower_margin"] = lower;
  r.detail["upper_margin"] = upper;
  return r;
}

CheckReport check_weighted_cs(const CMatrix& x, const CMatrix& y, const PDMatrix& a,
                              const Tolerance& tol) {
  require_same_shape(x, y, "check_weighted_cs");
  if (x.rows() != a.dim()) {
    throw Error(ErrorCode::kShapeMismatch, "check_weighted_cs: X rows must match A");
  }
  const double xy = std::norm((x.adjoint() * y).trace());
  const double xax = (x.adjoint() * a.entries() * x).trace().real();
  const double yay = (y.adjoint() * left_divide(a.entries(), y)).trace().real();
  const double rhs = xax * yay;
  CheckReport r = make_report("weighted_cs", a.dim(), 0, {Complex(xy, 0.0)}, rhs, rhs - xy,
                              tol.slack(std::abs(rhs) + xy), tol);
  r.detail["trace_xy_abs2"] = xy;
  r.detail["trace_xax"] = xax;
  r.detail["trace_yainvy"] = yay;
  return r;
}

CheckReport check_cs_trace(const CMatrix& a, const CMatrix& b, const Tolerance& tol) {
  require_same_shape(a, b, "check_cs_trace");
  const double ab = std::norm((a * b.adjoint()).trace());
  const double aa = (a * a.adjoint()).trace().real();
  const double bb = (b * b.adjoint()).trace().real();
  const double rhs = aa * bb;
  CheckReport r = make_report("cs_trace", static_cast<int>(a.rows()), 0, {Complex(ab, 0.0)}, rhs,
                              rhs - ab, tol.slack(rhs + ab), tol);
  r.detail["trace_abstar_abs2"] = ab;
  r.detail["trace_aastar"] = aa;
  r.detail["trace_bbstar"] = bb;
  return r;
}

CheckReport check_eigineq1(const PDMatrix& a, const PDMatrix& b, const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "check_eigineq1");
  const PDMatrix a_inv = inverse_pd(a);
  const PDMatrix b_inv = inverse_pd(b);
  const std::vector<double> mu = eig_pd_product(a, b_inv).real_parts();
  std::vector<double> eigs;
  eigs.reserve(mu.size());
  for (double m : mu) eigs.push_back(m + 1.0 / m - 2.0);
  std::sort(eigs.begin(), eigs.end());

  const Spectrum direct = eig_general((a.entries() - b.entries()) * (b_inv.entries() - a_inv.entries()));
  const double scale = std::max(mu.back(), 1.0 / mu.front());
  CheckReport r = make_report("eigineq1", a.dim(), 0, internal::to_complex(eigs), 0.0, eigs.front(),
                              tol.slack(scale), tol);
  r.detail["direct_eigenvalues"] = values_to_json(direct.values);
  r.detail["direct_max_abs_imag"] = direct.max_abs_imag();
  r.detail["path_discrepancy"] = internal::spectrum_discrepancy(eigs, direct.real_parts());
  return r;
}

CheckReport check_harmonic_loewner(const CyclicFamily& f, const Tolerance& tol) {
  const int n = f.dim();
  const int p = f.p();
  CMatrix inverse_sum = CMatrix::Zero(n, n);
  for (const auto& m : f.members()) inverse_sum += inverse_pd(m).entries();
  const PDMatrix total = internal::as_pd(sum(f), tol);
  const CMatrix scaled = static_cast<double>(p) * p * inverse_pd(total).entries();

  const LoewnerResult lw =
      loewner_geq(HermMatrix::symmetrize(inverse_sum), HermMatrix::symmetrize(scaled), tol);
  CheckReport r =
      make_report("harmonic_loewner", n, p, {Complex(lw.margin, 0.0)}, 0.0, lw.margin, lw.slack, tol);
  const Certificate cert = build_block_certificate(f, tol);
  r.detail["loewner_margin"] = lw.margin;
  r.detail["schur_margin"] = cert.value("schur_margin");
  r.detail["schur_residual"] = cert.value("schur_residual");
  r.detail["block_psd"] = cert.valid;
  r.holds = r.holds && cert.valid;
  return r;
}

CheckReport check_product_sum_eigs(const CyclicFamily& f, const Tolerance& tol) {
  const int n = f.dim();
  const int p = f.p();
  CMatrix inverse_sum = CMatrix::Zero(n, n);
  for (const auto& m : f.members()) inverse_sum += inverse_pd(m).entries();
  const std::vector<double> eigs =
      eig_pd_product(internal::as_pd(sum(f), tol), internal::as_pd(inverse_sum, tol)).real_parts();
  const double bound = static_cast<double>(p) * p;
  CheckReport r = make_report("product_sum_eigs", n, p, internal::to_complex(eigs), bound,
                              eigs.front() - bound, tol.slack(eigs.back() + bound), tol);
  r.detail["min_eigenvalue"] = eigs.front();
  r.detail["max_eigenvalue"] = eigs.back();
  return r;
}

CheckReport check_nesbitt(const PDMatrix& a, const PDMatrix& b, const PDMatrix& c,
                          const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "check_nesbitt");
  require_same_dim(a.dim(), c.dim(), "check_nesbitt");
  const std::array<PDMatrix, 3> members{a, b, c};
  CheckReport r = nesbitt_family("nesbitt", members, tol);
  r.p = 0;
  return r;
}

CheckReport check_nesbitt_k(const CyclicFamily& f, const Tolerance& tol) {
  if (f.p() < 2) {
    throw Error(ErrorCode::kSingularDenominator, "k = 1: S - A_1 is the zero matrix");
  }
  return nesbitt_family("nesbitt_k", f.members(), tol);
}

CheckReport check_upper_bound_2ab(const PDMatrix& a, const PDMatrix& b, const PDMatrix& c,
                                  const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "check_upper_bound_2ab");
  require_same_dim(a.dim(), c.dim(), "check_upper_bound_2ab");
  const int n = a.dim();
  const CMatrix& ea = a.entries();
  const CMatrix& eb = b.entries();
  const CMatrix& ec = c.entries();
  const CMatrix d1 = 2.0 * ea + eb;
  const CMatrix d2 = 2.0 * eb + ec;
  const CMatrix d3 = 2.0 * ec + ea;
  const CMatrix m = right_divide(ea, d1) + right_divide(eb, d2) + right_divide(ec, d3);
  const CMatrix nn = right_divide(eb, d1) + right_divide(ec, d2) + right_divide(ea, d3);

  const double trace_m = m.trace().real();
  const double trace_n = nn.trace().real();
  const double identity_residual =
      internal::relative((2.0 * m + nn - 3.0 * eye(n)).norm(), m.norm() + nn.norm());
  const double bound = (3.0 * n - 1.0) / 2.0;
  const double margin_n = trace_n - 1.0;
  const double margin_m = bound - trace_m;
  const double slack = tol.slack(std::abs(trace_m) + std::abs(trace_n) + 3.0 * n);

  CheckReport r = make_report("upper_bound_2ab", n, 0, {Complex(trace_m, 0.0)}, bound,
                              std::min(margin_n, margin_m), slack, tol);
  const Certificate cert = build_wz_certificate(a, b, c, tol);
  r.holds = r.holds && identity_residual <= kIdentityTol;
  r.detail["trace_m"] = trace_m;
  r.detail["trace_n"] = trace_n;
  r.detail["two_m_plus_n_residual"] = identity_residual;
  r.detail["margin_trace_n"] = margin_n;
  r.detail["margin_trace_m"] = margin_m;
  r.detail["wz_residual"] = cert.value("wz_residual");
  r.detail["quotient"] = cert.value("quotient");
  return r;
}

CheckReport check_square_cycle(const CyclicFamily& f, const Tolerance& tol) {
  const int n = f.dim();
  const int p = f.p();
  double lhs = 0.0;
  for (int i = 0; i < p; ++i) {
    const CMatrix& ai = f[i].entries();
    lhs += trace_right_divide(ai * ai, f[i + 1].entries()).real();
  }
  const double rhs = sum(f).trace().real();
  const Certificate cert = build_square_cycle_certificate(f);
  CheckReport r = make_report("square_cycle", n, p, {Complex(lhs, 0.0)}, rhs, lhs - rhs,
                              tol.slack(std::abs(lhs) + std::abs(rhs)), tol);
  r.holds = r.holds && cert.valid;
  r.detail["lhs_trace"] = lhs;
  r.detail["rhs_trace"] = rhs;
  r.detail["wz_residual"] = cert.value("wz_residual");
  r.detail["zz_residual"] = cert.value("zz_residual");
  r.detail["ww_trace_residual"] = cert.value("ww_trace_residual");
  return r;
}

}  // namespace cyclicpd::inequalities
