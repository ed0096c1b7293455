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

#ifndef CYCLICPD_INEQUALITIES_FIXTURE_HPP_
#define CYCLICPD_INEQUALITIES_FIXTURE_HPP_

#include <array>

#include "cyclicpd/inequalities/report.hpp"
#include "cyclicpd/pdcore/matrix.hpp"

namespace cyclicpd::inequalities {

// Four real 2x2 PD matrices whose four-term cyclic sum has a non-real
// spectrum, so the eigenvalue form of the p = 4 Shapiro inequality fails
// while its trace form still holds.
struct CounterexampleFixture {
  PDMatrix a;
  PDMatrix b;
  PDMatrix c;
  PDMatrix d;

  CyclicFamily family() const { return CyclicFamily({a, b, c, d}); }
};

const CounterexampleFixture& counterexample_fixture();

// Reference values, 4 decimal places.
inline constexpr double kExpectedRealPart = 2.6393;
inline constexpr double kExpectedImagPart = 0.1871;
inline constexpr double kExpectedTrace = 2.0 * kExpectedRealPart;
inline constexpr double kFixtureTol = 1e-3;

// Builds M = A(B+C)^{-1} + B(C+D)^{-1} + C(D+A)^{-1} + D(A+B)^{-1} from the
// fixture and compares its spectrum to the expected pair. holds is false:
// the spectrum is not real, so "lambda(M) >= 2" fails; margin is
// -max |Im lambda|. Throws FixtureMismatch beyond kFixtureTol.
// detail: expected, deviation, closed_form, closed_form_discrepancy,
// max_abs_imag, effectively_real, trace, trace_expected, trace_bound, trace_holds.
CheckReport reproduce_counterexample(const Tolerance& tol = {});

}  // namespace cyclicpd::inequalities

#endif  // CYCLICPD_INEQUALITIES_FIXTURE_HPP_
