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

#include "manifest.hpp"

#include <ctime>
#include <iomanip>
#include <sstream>

#include "cyclicpd/cli/commands.hpp"

#ifndef CYCLICPD_VERSION
#define CYCLICPD_VERSION "0.0.0"
#endif

namespace cyclicpd::cli {

std::string tool_version() { return CYCLICPD_VERSION; }

Json tolerance_json(const Tolerance& tol) { return Json{{"rel", tol.rel}, {"abs", tol.abs}}; }

RunManifest::RunManifest(std::string command, Json config, std::uint64_t master_seed)
    : command_(std::move(command)),
      config_(std::move(config)),
      master_seed_(master_seed),
      started_(std::chrono::system_clock::now()),
      clock_start_(std::chrono::steady_clock::now()) {}

Json RunManifest::finish() const {
  const std::time_t t = std::chrono::system_clock::to_time_t(started_);
  std::tm utc{};
  gmtime_r(&t, &utc);
  std::ostringstream started;
  started << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - clock_start_);

  Json j;
  j["command"] = command_;
  j["config"] = config_;
  j["master_seed"] = master_seed_;
  j["tool_version"] = tool_version();
  j["started"] = started.str();
  j["elapsed_ms"] = elapsed.count();
  j["summary"] = summary_;
  j["results"] = results_;
  return j;
}

Json strip_timestamps(const Json& manifest) {
  Json copy = manifest;
  if (copy.is_object()) {
    copy.erase("started");
    copy.erase("elapsed_ms");
  }
  return copy;
}

}  // namespace cyclicpd::cli
