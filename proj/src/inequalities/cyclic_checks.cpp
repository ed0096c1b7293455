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

#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/functions.hpp"
#include "cyclicpd/pdcore/spectrum.hpp"
#include "internal.hpp"

namespace cyclicpd::inequalities {

using internal::eye;

namespace {

void require_cyclic(const CyclicFamily& f, int min_p, const char* what) {
  if (f.p() < min_p) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " needs p >= " + std::to_string(min_p) + ", got " +
                    std::to_string(f.p()));
  }
}

}  // namespace

bool scalar_shapiro_holds(int p) {
  if (p < 3) return false;
  if (p <= 12) return true;
  return p <= 23 && p % 2 == 1;
}

CMatrix cyclic_sum_matrix(const CyclicFamily& f) {
  const int n = f.dim();
  CMatrix out = CMatrix::Zero(n, n);
  for (int i = 0; i < f.p(); ++i) {
    out += right_divide(f[i].entries(), f[i + 1].entries() + f[i + 2].entries());
  }
  return out;
}

double eval_Fp(const CyclicFamily& f) {
  require_cyclic(f, 3, "eval_Fp");
  double total = 0.0;
  for (int i = 0; i < f.p(); ++i) {
    total += trace_right_divide(f[i].entries(), f[i + 1].entries() + f[i + 2].entries()).real();
  }
  return total;
}

CheckReport check_shapiro_trace(const CyclicFamily& f, const Tolerance& tol) {
  const double fp = eval_Fp(f);
  const double bound = 0.5 * f.p() * f.dim();
  CheckReport r = make_report("shapiro_trace", f.dim(), f.p(), {Complex(fp, 0.0)}, bound,
                              fp - bound, tol.slack(std::abs(fp) + bound), tol);
  r.detail["fp"] = fp;
  r.detail["bound"] = bound;
  r.detail["scalar_inequality_holds"] = scalar_shapiro_holds(f.p());
  return r;
}

CheckReport check_s4_decomposition(const PDMatrix& a, const PDMatrix& b, const PDMatrix& c,
                                   const PDMatrix& d, const Tolerance& tol) {
  for (const PDMatrix* m : {&b, &c, &d}) require_same_dim(a.dim(), m->dim(), "check_s4_decomposition");
  const int n = a.dim();
  const CMatrix& ea = a.entries();
  const CMatrix& eb = b.entries();
  const CMatrix& ec = c.entries();
  const CMatrix& ed = d.entries();
  const CMatrix bc = eb + ec;
  const CMatrix cd = ec + ed;
  const CMatrix da = ed + ea;
  const CMatrix ab = ea + eb;

  const CMatrix m = right_divide(ea, bc) + right_divide(eb, cd) + right_divide(ec, da) + right_divide(ed, ab);
  const CMatrix nn = right_divide(eb, bc) + right_divide(ec, cd) + right_divide(ed, da) + right_divide(ea, ab);
  const CMatrix pp = right_divide(ec, bc) + right_divide(ed, cd) + right_divide(ea, da) + right_divide(eb, ab);

  const double trace_m = m.trace().real();
  const double trace_n = nn.trace().real();
  const double trace_p = pp.trace().real();
  const double residual = internal::relative((nn + pp - 4.0 * eye(n)).norm(), nn.norm() + pp.norm());
  const double margin_mp = trace_m + trace_p - 4.0 * n;
  const double margin_mn = trace_m + trace_n - 4.0 * n;
  const double margin_m = trace_m - 2.0 * n;

  const double slack = tol.slack(std::abs(trace_m) + std::abs(trace_n) + std::abs(trace_p) + 4.0 * n);
  CheckReport r = make_report("s4_decomposition", n, 4, {Complex(trace_m, 0.0)}, 2.0 * n,
                              std::min({margin_mp, margin_mn, margin_m}), slack, tol);
  r.holds = r.holds && residual <= kIdentityTol;
  r.detail["trace_m"] = trace_m;
  r.detail["trace_n"] = trace_n;
  r.detail["trace_p"] = trace_p;
  r.detail["n_plus_p_residual"] = residual;
  r.detail["margin_m_plus_p"] = margin_mp;
  r.detail["margin_m_plus_n"] = margin_mn;
  r.detail["margin_m"] = margin_m;
  return r;
}

CheckReport check_shapiro_extension(const CyclicFamily& f, const Tolerance& tol) {
  require_cyclic(f, 3, "check_shapiro_extension");
  const double fp = eval_Fp(f);
  const double extended = eval_Fp(f.extended(2));
  const double expected = fp + f.dim();
  const double residual = std::abs(extended - expected) / (1.0 + std::abs(expected));
  CheckReport r = make_report("shapiro_extension", f.dim(), f.p(), {Complex(extended, 0.0)}, expected,
                              -residual * (1.0 + std::abs(expected)),
                              kIdentityTol * (1.0 + std::abs(expected)), tol);
  r.detail["fp"] = fp;
  r.detail["fp_extended"] = extended;
  r.detail["relative_residual"] = residual;
  return r;
}

CheckReport check_bidirectional(const CyclicFamily& f, const Tolerance& tol) {
  require_cyclic(f, 3, "check_bidirectional");
  const double forward = eval_Fp(f);
  const double reverse = eval_Fp(f.reversed());
  const double bound = static_cast<double>(f.p()) * f.dim();
  CheckReport r = make_report("bidirectional", f.dim(), f.p(), {Complex(forward + reverse, 0.0)}, bound,
                              forward + reverse - bound,
                              tol.slack(std::abs(forward) + std::abs(reverse) + bound), tol);
  r.detail["forward"] = forward;
  r.detail["reverse"] = reverse;
  return r;
}

CheckReport check_bidirectional_eig4(const PDMatrix& a1, const PDMatrix& a2, const PDMatrix& a3,
                                     const PDMatrix& a4, const Tolerance& tol) {
  for (const PDMatrix* m : {&a2, &a3, &a4}) require_same_dim(a1.dim(), m->dim(), "check_bidirectional_eig4");
  const int n = a1.dim();
  const CyclicFamily f({a1, a2, a3, a4});
  const CMatrix total = cyclic_sum_matrix(f) + cyclic_sum_matrix(f.reversed());
  const Spectrum spec = eig_general(total);
  std::vector<double> eigs = spec.real_parts();

  // With X_i = A_i + A_{i+1}: X_{i-1} + X_{i+1} = S for p = 4, so the total
  // equals S (X_1^{-1} + ... + X_4^{-1}) - 4I, a PD product shifted by -4.
  CMatrix inverse_sum = CMatrix::Zero(n, n);
  for (int i = 0; i < 4; ++i) {
    inverse_sum += inverse_pd(internal::as_pd(f[i].entries() + f[i + 1].entries(), tol)).entries();
  }
  std::vector<double> reduced =
      eig_pd_product(internal::as_pd(sum(f), tol), internal::as_pd(inverse_sum, tol)).real_parts();
  for (double& e : reduced) e -= 4.0;

  constexpr double bound = 4.0;
  const double realness = 1e-8 * total.norm();
  CheckReport r = make_report("bidirectional_eig4", n, 4, spec.values, bound, eigs.front() - bound,
                              tol.slack(spec.max_abs() + bound), tol);
  r.detail["max_abs_imag"] = spec.max_abs_imag();
  r.detail["effectively_real"] = spec.max_abs_imag() <= realness;
  r.detail["reduced_min"] = reduced.front();
  r.detail["reduction_discrepancy"] = internal::spectrum_discrepancy(eigs, reduced);
  return r;
}

}  // namespace cyclicpd::inequalities
