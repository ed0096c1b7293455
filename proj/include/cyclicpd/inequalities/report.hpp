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

#ifndef CYCLICPD_INEQUALITIES_REPORT_HPP_
#define CYCLICPD_INEQUALITIES_REPORT_HPP_

#include <string>
#include <vector>

#include "cyclicpd/pdcore/matrix.hpp"
#include "cyclicpd/pdcore/serialize.hpp"
#include "cyclicpd/pdcore/tolerance.hpp"

namespace cyclicpd::inequalities {

// Relative residual cap for the exact algebraic identities (N + P = 4I,
// 2M + N = 3I, WZ* = A + B + C, the extension identity, ...).
inline constexpr double kIdentityTol = 1e-10;

// Outcome of one inequality check. margin is lhs - rhs oriented so that
// margin >= 0 means the inequality holds exactly; holds is margin >= -slack.
struct CheckReport {
  std::string check;
  int n = 0;
  int p = 0;  // 0 when the check is not about a cyclic family
  std::vector<Complex> lhs;
  double rhs = 0.0;
  double margin = 0.0;
  double slack = 0.0;
  bool holds = false;
  Tolerance tol;
  Json detail = Json::object();

  // margin in units of slack; holds iff >= -1.
  double relative_margin() const { return slack > 0.0 ? margin / slack : margin; }
};

CheckReport make_report(std::string check, int n, int p, std::vector<Complex> lhs, double rhs,
                        double margin, double slack, const Tolerance& tol);

// Report for an exact identity: lhs is the relative residual, rhs the cap.
CheckReport identity_report(std::string check, int n, int p, double residual,
                            const Tolerance& tol, double cap = kIdentityTol);

// {"check", "n", "p", "holds", "margin", "lhs", "rhs", "slack", "detail", "tol"}.
// A single real lhs is written as a number, anything else as a list whose
// entries are numbers (real) or [re, im] pairs.
Json to_json(const CheckReport& r);

Json values_to_json(const std::vector<Complex>& values);
Json values_to_json(const std::vector<double>& values);

}  // namespace cyclicpd::inequalities

#endif  // CYCLICPD_INEQUALITIES_REPORT_HPP_
