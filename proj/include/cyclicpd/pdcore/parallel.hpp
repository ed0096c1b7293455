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

#ifndef CYCLICPD_PDCORE_PARALLEL_HPP_
#define CYCLICPD_PDCORE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace cyclicpd {

// Worker count from CYCLICPD_THREADS (unset or 0 = hardware concurrency).
unsigned worker_count();

// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is
// visited exactly once; callers write results into slot i so the outcome
// does not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned workers = worker_count());

}  // namespace cyclicpd

#endif  // CYCLICPD_PDCORE_PARALLEL_HPP_
