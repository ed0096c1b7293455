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

#ifndef CYCLICPD_SEARCH_SEARCH_HPP_
#define CYCLICPD_SEARCH_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclicpd/pdcore/matrix.hpp"
#include "cyclicpd/pdcore/serialize.hpp"
#include "cyclicpd/pdcore/tolerance.hpp"

namespace cyclicpd::search {

// Real-field search minimizing shapiro_margin over families
// A_i = L_i L_i^T + ridge I.
struct SearchConfig {
  int p = 3;
  int n = 1;
  int restarts = 32;
  int max_iters = 20000;
  double step_init = 1.0;
  double ridge = 1e-8;
  std::uint64_t master_seed = 0;
  Tolerance tol{};
  unsigned workers = 0;  // 0: worker_count(); never affects results

  // Throws InvalidArgument on nonpositive sizes or budgets.
  void validate() const;
};

enum class Classification {
  kNoCounterexample,  // verified margin >= 0
  kNoise,             // in (-10 tol.rel, 0)
  kCandidate,         // below -10 tol.rel, did not survive tightened re-verification
  kVerifiedCounterexample,
};

std::string_view to_string(Classification c);

struct RestartOutcome {
  int restart = 0;
  std::vector<RMatrix> factors;
  double margin = 0.0;
  int iterations = 0;
  std::vector<std::pair<int, double>> history;  // (iteration, margin), non-increasing
  bool diverged = false;
  std::string note;
};

struct SearchResult {
  int p = 0;
  int n = 0;
  std::optional<CyclicFamily> best_family;
  double best_margin = 0.0;      // optimizer's value for best_family
  double verified_margin = 0.0;  // recomputed from the serialized family
  double tightened_margin = 0.0; // refined-inverse recomputation used for promotion
  bool verified = false;
  Classification classification = Classification::kNoCounterexample;
  int best_restart = -1;
  int iterations_used = 0;   // iterations of the best restart
  long total_iterations = 0; // over all restarts
  std::vector<std::pair<int, double>> margin_history;
  std::vector<double> restart_margins;  // NaN for skipped restarts
  std::vector<std::pair<int, std::string>> skipped_restarts;
  SearchConfig config;

  // A verified negative margin for p in {12, 23} at n >= 2.
  bool conjecture_event() const;
  // A verified negative margin where the inequality is a theorem
  // (p in {3, 4} for any n, or any scalar-valid p at n = 1).
  bool theorem_violation() const;
};

// One restart of Armijo-backtracking gradient descent. Deterministic in
// (cfg.master_seed, cfg.p, cfg.n, restart).
RestartOutcome run_restart(const SearchConfig& cfg, int restart);

// Initial factors drawn for a restart.
std::vector<RMatrix> initial_factors(const SearchConfig& cfg, int restart);

// All restarts (concurrently), best by margin with ties to the lowest
// restart index, then verification: the best family is serialized, parsed
// back and re-evaluated; a disagreement beyond 1e-9 (1 + F_p) with the
// optimizer's value throws SoundnessViolation.
SearchResult minimize_margin(const SearchConfig& cfg);

// Sweep n in {1, 2, 3} for p in {12, 23}; one result per dimension.
std::vector<SearchResult> probe_conjecture(int p, const SearchConfig& cfg);

Json to_json(const SearchConfig& cfg);
Json to_json(const SearchResult& r);

}  // namespace cyclicpd::search

#endif  // CYCLICPD_SEARCH_SEARCH_HPP_
