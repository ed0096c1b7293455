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

#ifndef CYCLICPD_PDCORE_ERRORS_HPP_
#define CYCLICPD_PDCORE_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclicpd {

enum class ErrorCode {
  kNotSquare,
  kNotHermitian,
  kNotPositiveDefinite,
  kDimensionMismatch,
  kShapeMismatch,
  kConvergenceFailure,
  kIllConditioned,
  kSingularDenominator,
  kInvalidArgument,
  kFixtureMismatch,
  kParseError,
  kSoundnessViolation,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported as this exception type; code() carries
// the category so callers (the CLI in particular) can map it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the offending smallest eigenvalue so callers can report it.
class NotPositiveDefiniteError : public Error {
 public:
  explicit NotPositiveDefiniteError(double min_eig);

  double min_eig() const noexcept { return min_eig_; }

 private:
  double min_eig_;
};

}  // namespace cyclicpd

#endif  // CYCLICPD_PDCORE_ERRORS_HPP_
