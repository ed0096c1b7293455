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

#ifndef CYCLICPD_PDCORE_TOLERANCE_HPP_
#define CYCLICPD_PDCORE_TOLERANCE_HPP_

namespace cyclicpd {

// Comparison policy for floating-point checks of exact inequalities.
// A quantity q with bound b "holds" when q - b >= -slack(scale), where scale
// is the magnitude of the operands involved (norms, traces, bounds).
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  // Throws InvalidArgument unless both components are positive.
  static Tolerance make(double rel, double abs);

  double slack(double scale) const { return rel * (1.0 + scale); }
};

}  // namespace cyclicpd

#endif  // CYCLICPD_PDCORE_TOLERANCE_HPP_
