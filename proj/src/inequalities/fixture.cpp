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

#include "cyclicpd/inequalities/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/spectrum.hpp"

namespace cyclicpd::inequalities {

namespace {

PDMatrix real2x2(double a00, double a01, double a11) {
  RMatrix m(2, 2);
  m << a00, a01, a01, a11;
  return make_pd(m);
}

}  // namespace

const CounterexampleFixture& counterexample_fixture() {
  static const CounterexampleFixture fixture{
      real2x2(5.0, 6.0, 7.5),
      real2x2(2.0, 1.0, 2.0),
      real2x2(6.0, 4.0, 3.0),
      real2x2(3.0, 2.0, 5.0),
  };
  return fixture;
}

CheckReport reproduce_counterexample(const Tolerance& tol) {
  const CounterexampleFixture& fx = counterexample_fixture();
  const CMatrix m = cyclic_sum_matrix(fx.family());
  const Spectrum spec = eig_general(m);
  const std::array<Complex, 2> expected{Complex(kExpectedRealPart, -kExpectedImagPart),
                                         Complex(kExpectedRealPart, kExpectedImagPart)};
  double deviation = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    deviation = std::max({deviation, std::abs(spec.values[i].real() - expected[i].real()),
                          std::abs(spec.values[i].imag() - expected[i].imag())});
  }
  const std::array<Complex, 2> closed = eig_2x2_closed_form(m);
  double closed_diff = 0.0;
  for (std::size_t i = 0; i < 2; ++i) closed_diff = std::max(closed_diff, std::abs(closed[i] - spec.values[i]));

  const double trace = m.trace().real();
  const double realness = 1e-8 * m.norm();
  CheckReport r = make_report("counterexample", 2, 4, spec.values, 2.0, -spec.max_abs_imag(),
                              realness, tol);
  r.detail["expected"] = Json::array({complex_to_json(expected[0]), complex_to_json(expected[1])});
  r.detail["deviation"] = deviation;
  r.detail["closed_form"] = Json::array({complex_to_json(closed[0]), complex_to_json(closed[1])});
  r.detail["closed_form_discrepancy"] = closed_diff;
  r.detail["max_abs_imag"] = spec.max_abs_imag();
  r.detail["effectively_real"] = spec.max_abs_imag() <= realness;
  r.detail["trace"] = trace;
  r.detail["trace_expected"] = kExpectedTrace;
  r.detail["trace_bound"] = 4.0;
  r.detail["trace_holds"] = trace >= 4.0;

  if (!(deviation <= kFixtureTol) || !(std::abs(trace - kExpectedTrace) <= kFixtureTol)) {
    std::ostringstream os;
    os.precision(6);
    os << "spectrum deviates from the expected pair by " << deviation << " (trace " << trace << ")";
    throw Error(ErrorCode::kFixtureMismatch, os.str());
  }
  return r;
}

}  // namespace cyclicpd::inequalities
