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

#ifndef CYCLICPD_CLI_COMMANDS_HPP_
#define CYCLICPD_CLI_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicpd/pdcore/serialize.hpp"
#include "cyclicpd/pdcore/tolerance.hpp"

namespace cyclicpd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

// "3", "1..4" (inclusive) or "3,5,7". Throws InvalidArgument.
std::vector<int> parse_int_range(std::string_view text);

struct VerifyOptions {
  std::string suite = "all";  // unconditional | conditional | identities | all
  std::vector<int> dims{1, 2, 3, 4};
  std::vector<int> p_values{3, 4, 5, 6};
  int trials = 100;
  std::uint64_t seed = 0;
  std::string field = "both";  // real | complex | both
  Tolerance tol{};
  std::optional<std::filesystem::path> out;
  unsigned workers = 0;
};

struct ReproduceOptions {
  std::string case_name = "all";  // shapiro4-eig | shapiro4-trace | all
  Tolerance tol{};
  std::optional<std::filesystem::path> out;
};

struct SearchOptions {
  int p = 3;
  std::optional<int> n;  // omitted: the n-sweep for p in {12, 23}, else n = 1
  int restarts = 32;
  int max_iters = 20000;
  double step_init = 1.0;
  double ridge = 1e-8;
  std::uint64_t seed = 0;
  Tolerance tol{};
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> witness_dir;
  unsigned workers = 0;
};

struct EvalOptions {
  std::filesystem::path family_file;
  std::string expr = "Fp";  // Fp | margin | nesbitt_eigs | bidirectional
  int index = 0;
  Tolerance tol{};
};

struct SampleOptions {
  int n = 2;
  int p = 3;
  int count = 1;
  std::uint64_t seed = 0;
  std::string field = "real";
  double ridge = 1e-3;
  Tolerance tol{};
  std::optional<std::filesystem::path> out;
};

// exit_code follows the CLI contract; output is what the command prints or
// writes (a run manifest for verify/reproduce/search, a value object for
// eval, family JSON for sample).
struct CommandOutcome {
  int exit_code = kExitOk;
  Json output;
};

CommandOutcome cmd_verify(const VerifyOptions& opts);
CommandOutcome cmd_reproduce(const ReproduceOptions& opts);
CommandOutcome cmd_search(const SearchOptions& opts);
CommandOutcome cmd_eval(const EvalOptions& opts);
CommandOutcome cmd_sample(const SampleOptions& opts);

// Full command line entry point. JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Copy of a manifest without its timestamp fields, for replay comparisons.
Json strip_timestamps(const Json& manifest);

}  // namespace cyclicpd::cli

#endif  // CYCLICPD_CLI_COMMANDS_HPP_
