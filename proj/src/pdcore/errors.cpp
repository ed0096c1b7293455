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

#include "cyclicpd/pdcore/errors.hpp"

#include <sstream>

namespace cyclicpd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::kIllConditioned: return "IllConditioned";
    case ErrorCode::kSingularDenominator: return "SingularDenominator";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kFixtureMismatch: return "FixtureMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSoundnessViolation: return "SoundnessViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

namespace {
std::string describe_min_eig(double min_eig) {
  std::ostringstream os;
  os.precision(17);
  os << "smallest eigenvalue " << min_eig << " is not positive";
  return os.str();
}
}  // namespace

NotPositiveDefiniteError::NotPositiveDefiniteError(double min_eig)
    : Error(ErrorCode::kNotPositiveDefinite, describe_min_eig(min_eig)),
      min_eig_(min_eig) {}

}  // namespace cyclicpd
