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

#ifndef CYCLICPD_SRC_CLI_MANIFEST_HPP_
#define CYCLICPD_SRC_CLI_MANIFEST_HPP_

#include <chrono>
#include <string>

#include "cyclicpd/pdcore/serialize.hpp"
#include "cyclicpd/pdcore/tolerance.hpp"

namespace cyclicpd::cli {

// Accumulates a run manifest: command, echoed config, seed, version,
// timestamps and results.
class RunManifest {
 public:
  RunManifest(std::string command, Json config, std::uint64_t master_seed);

  void add_result(Json result) { results_.push_back(std::move(result)); }
  void set_summary(Json summary) { summary_ = std::move(summary); }
  Json finish() const;

 private:
  std::string command_;
  Json config_;
  std::uint64_t master_seed_;
  std::chrono::system_clock::time_point started_;
  std::chrono::steady_clock::time_point clock_start_;
  Json results_ = Json::array();
  Json summary_ = Json::object();
};

Json tolerance_json(const Tolerance& tol);
std::string tool_version();

}  // namespace cyclicpd::cli

#endif  // CYCLICPD_SRC_CLI_MANIFEST_HPP_
