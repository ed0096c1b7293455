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

#include "cyclicpd/inequalities/report.hpp"

namespace cyclicpd::inequalities {

CheckReport make_report(std::string check, int n, int p, std::vector<Complex> lhs, double rhs,
                        double margin, double slack, const Tolerance& tol) {
  CheckReport r;
  r.check = std::move(check);
  r.n = n;
  r.p = p;
  r.lhs = std::move(lhs);
  r.rhs = rhs;
  r.margin = margin;
  r.slack = slack;
  r.holds = margin >= -slack;
  r.tol = tol;
  return r;
}

CheckReport identity_report(std::string check, int n, int p, double residual,
                            const Tolerance& tol, double cap) {
  CheckReport r = make_report(std::move(check), n, p, {Complex(residual, 0.0)}, cap,
                              cap - residual, 0.0, tol);
  r.detail["relative_residual"] = residual;
  return r;
}

Json values_to_json(const std::vector<Complex>& values) {
  Json out = Json::array();
  for (const auto& v : values) {
    if (v.imag() == 0.0) {
      out.push_back(v.real());
    } else {
      out.push_back(complex_to_json(v));
    }
  }
  return out;
}

Json values_to_json(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

Json to_json(const CheckReport& r) {
  Json out;
  out["check"] = r.check;
  out["n"] = r.n;
  out["p"] = r.p;
  out["holds"] = r.holds;
  out["margin"] = r.margin;
  if (r.lhs.size() == 1 && r.lhs.front().imag() == 0.0) {
    out["lhs"] = r.lhs.front().real();
  } else {
    out["lhs"] = values_to_json(r.lhs);
  }
  out["rhs"] = r.rhs;
  out["slack"] = r.slack;
  out["detail"] = r.detail;
  out["tol"] = Json{{"rel", r.tol.rel}, {"abs", r.tol.abs}};
  return out;
}

}  // namespace cyclicpd::inequalities
