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

#include "cyclicpd/search/search.hpp"

#include <cmath>
#include <limits>

#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/functions.hpp"
#include "cyclicpd/pdcore/parallel.hpp"
#include "cyclicpd/pdcore/random.hpp"
#include "cyclicpd/search/objective.hpp"

namespace cyclicpd::search {

namespace {

constexpr std::uint64_t kSearchStream = 0x5345415243480000ULL;
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-20;
constexpr double kMaxStep = 1e6;
constexpr double kGradientFloor = 1e-28;
constexpr int kGaugeInterval = 100;
constexpr int kHistoryInterval = 50;
constexpr int kStallWindow = 2000;
constexpr double kStallImprovement = 1e-13;
constexpr double kSoundnessTol = 1e-9;
constexpr double kTightenedTol = 1e-12;

double squared_norm(const std::vector<RMatrix>& g) {
  double s = 0.0;
  for (const auto& m : g) s += m.squaredNorm();
  return s;
}

// Rescales all factors so that sum Tr(A_i) = p n. Exact gauge symmetry of
// F_p when ridge = 0; with a positive ridge it is applied only if the
// objective does not increase.
void renormalize(std::vector<RMatrix>& factors, double& margin, const SearchConfig& cfg) {
  double factor_mass = 0.0;
  for (const auto& l : factors) factor_mass += RMatrix(l.triangularView<Eigen::Lower>()).squaredNorm();
  const double pn = static_cast<double>(cfg.p) * cfg.n;
  const double target = pn - pn * cfg.ridge;
  if (!(factor_mass > 0.0) || !(target > 0.0)) return;
  const double scale = std::sqrt(target / factor_mass);
  std::vector<RMatrix> scaled = factors;
  for (auto& l : scaled) l *= scale;
  const double m = margin_from_factors(scaled, cfg.ridge);
  if (m <= margin) {
    factors = std::move(scaled);
    margin = m;
  }
}

// Fp recomputed with explicitly refined inverses of each denominator.
double refined_fp(const CyclicFamily& f) {
  double total = 0.0;
  for (int i = 0; i < f.p(); ++i) {
    const PDMatrix denom = make_pd(HermMatrix::symmetrize(f[i + 1].entries() + f[i + 2].entries()));
    total += (f[i].entries() * inverse_pd(denom).entries()).trace().real();
  }
  return total;
}

}  // namespace

void SearchConfig::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (p < 3) fail("search needs p >= 3");
  if (n < 1) fail("search needs n >= 1");
  if (restarts < 1) fail("restarts must be positive");
  if (max_iters < 1) fail("max_iters must be positive");
  if (!(step_init > 0.0)) fail("step_init must be positive");
  if (!(ridge > 0.0)) fail("ridge must be positive");
  Tolerance::make(tol.rel, tol.abs);
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kNoCounterexample: return "no-counterexample";
    case Classification::kNoise: return "noise";
    case Classification::kCandidate: return "candidate";
    case Classification::kVerifiedCounterexample: return "verified-counterexample";
  }
  return "unknown";
}

bool SearchResult::conjecture_event() const {
  return classification == Classification::kVerifiedCounterexample && (p == 12 || p == 23) && n >= 2;
}

bool SearchResult::theorem_violation() const {
  if (classification != Classification::kVerifiedCounterexample) return false;
  if (p == 3 || p == 4) return true;
  return n == 1 && inequalities::scalar_shapiro_holds(p);
}

std::vector<RMatrix> initial_factors(const SearchConfig& cfg, int restart) {
  RngStream rng = RngStream::derive(
      cfg.master_seed, {kSearchStream, static_cast<std::uint64_t>(cfg.p),
                        static_cast<std::uint64_t>(cfg.n), static_cast<std::uint64_t>(restart)});
  std::vector<RMatrix> factors;
  factors.reserve(static_cast<std::size_t>(cfg.p));
  for (int i = 0; i < cfg.p; ++i) {
    if (cfg.n == 1) {
      // log-uniform a in [e^-3, e^3]; the factor is sqrt(a).
      factors.push_back(RMatrix::Constant(1, 1, std::sqrt(std::exp(rng.uniform(-3.0, 3.0)))));
    } else {
      RMatrix l = RMatrix::Identity(cfg.n, cfg.n);
      for (int c = 0; c < cfg.n; ++c) {
        for (int r = 0; r < cfg.n; ++r) l(r, c) += 0.5 * rng.normal();
      }
      factors.push_back(l.triangularView<Eigen::Lower>());
    }
  }
  return factors;
}

RestartOutcome run_restart(const SearchConfig& cfg, int restart) {
  RestartOutcome out;
  out.restart = restart;
  out.factors = initial_factors(cfg, restart);
  double margin = margin_from_factors(out.factors, cfg.ridge);
  if (!std::isfinite(margin)) {
    out.diverged = true;
    out.note = "initial objective is not finite";
    out.margin = margin;
    return out;
  }
  out.history.emplace_back(0, margin);

  double step = cfg.step_init;
  int it = 0;
  double window_start = margin;
  while (it < cfg.max_iters) {
    const std::vector<RMatrix> grad = margin_gradient(out.factors, cfg.ridge);
    const double gn2 = squared_norm(grad);
    if (!std::isfinite(gn2)) {
      out.note = "gradient is not finite";
      break;
    }
    if (gn2 < kGradientFloor) {
      out.note = "gradient vanished";
      break;
    }
    double t = step;
    std::vector<RMatrix> trial(out.factors.size());
    double trial_margin = std::numeric_limits<double>::infinity();
    bool accepted = false;
    while (t >= kMinStep) {
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = out.factors[i] - t * grad[i];
      trial_margin = margin_from_factors(trial, cfg.ridge);
      if (std::isfinite(trial_margin) && trial_margin <= margin - kArmijo * t * gn2) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      out.note = "line search stalled";
      break;
    }
    ++it;
    out.factors = std::move(trial);
    margin = trial_margin;
    step = std::min(2.0 * t, kMaxStep);
    if (it % kGaugeInterval == 0) renormalize(out.factors, margin, cfg);
    if (it % kHistoryInterval == 0) out.history.emplace_back(it, margin);
    if (it % kStallWindow == 0) {
      if (window_start - margin < kStallImprovement * (1.0 + std::abs(margin))) {
        out.note = "progress stalled";
        break;
      }
      window_start = margin;
    }
  }
  if (out.history.back().first != it) out.history.emplace_back(it, margin);
  if (out.note.empty()) out.note = "iteration budget exhausted";
  out.iterations = it;
  out.margin = margin;
  return out;
}

SearchResult minimize_margin(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
  parallel_for(
      outcomes.size(),
      [&](std::size_t r) {
        try {
          outcomes[r] = run_restart(cfg, static_cast<int>(r));
        } catch (const Error& e) {
          outcomes[r].restart = static_cast<int>(r);
          outcomes[r].diverged = true;
          outcomes[r].note = e.what();
        }
      },
      cfg.workers == 0 ? worker_count() : cfg.workers);

  SearchResult result;
  result.p = cfg.p;
  result.n = cfg.n;
  result.config = cfg;
  const RestartOutcome* best = nullptr;
  for (const auto& o : outcomes) {
    result.total_iterations += o.iterations;
    if (o.diverged || !std::isfinite(o.margin)) {
      result.restart_margins.push_back(std::numeric_limits<double>::quiet_NaN());
      result.skipped_restarts.emplace_back(o.restart, o.note);
      continue;
    }
    result.restart_margins.push_back(o.margin);
    if (best == nullptr || o.margin < best->margin) best = &o;
  }
  if (best == nullptr) return result;

  result.best_restart = best->restart;
  result.best_margin = best->margin;
  result.iterations_used = best->iterations;
  result.margin_history = best->history;

  // Soundness gate: re-evaluate from the serialized family.
  const CyclicFamily family = factors_to_family(best->factors, cfg.ridge);
  const CyclicFamily replay = parse_family(to_json(family));
  const double fp = inequalities::eval_Fp(replay);
  const double bound = 0.5 * cfg.p * cfg.n;
  result.verified_margin = fp - bound;
  if (std::abs(result.verified_margin - result.best_margin) > kSoundnessTol * (1.0 + fp)) {
    throw Error(ErrorCode::kSoundnessViolation,
                "optimizer margin " + std::to_string(result.best_margin) +
                    " disagrees with recomputed margin " + std::to_string(result.verified_margin));
  }
  const double fp_refined = refined_fp(replay);
  result.tightened_margin = fp_refined - bound;
  result.verified = std::abs(fp_refined - fp) <= kSoundnessTol * (1.0 + fp);
  result.best_family = replay;

  const double noise_floor = 10.0 * cfg.tol.rel;
  const double m = result.verified_margin;
  if (m >= 0.0) {
    result.classification = Classification::kNoCounterexample;
  } else if (m > -noise_floor) {
    result.classification = Classification::kNoise;
  } else {
    const double tight_floor = 10.0 * kTightenedTol * (1.0 + fp);
    const bool agree = std::abs(fp_refined - fp) <= kTightenedTol * (1.0 + fp);
    const bool survives = result.verified && agree && result.tightened_margin < -tight_floor &&
                          m < -tight_floor;
    result.classification =
        survives ? Classification::kVerifiedCounterexample : Classification::kCandidate;
  }
  return result;
}

std::vector<SearchResult> probe_conjecture(int p, const SearchConfig& cfg) {
  if (p != 12 && p != 23) throw Error(ErrorCode::kInvalidArgument, "the probe targets p = 12 or p = 23");
  std::vector<SearchResult> out;
  for (int n = 1; n <= 3; ++n) {
    SearchConfig c = cfg;
    c.p = p;
    c.n = n;
    out.push_back(minimize_margin(c));
  }
  return out;
}

Json to_json(const SearchConfig& cfg) {
  Json j;
  j["p"] = cfg.p;
  j["n"] = cfg.n;
  j["restarts"] = cfg.restarts;
  j["max_iters"] = cfg.max_iters;
  j["step_init"] = cfg.step_init;
  j["ridge"] = cfg.ridge;
  j["master_seed"] = cfg.master_seed;
  j["field"] = "real";
  j["target"] = "shapiro_margin";
  j["tol"] = Json{{"rel", cfg.tol.rel}, {"abs", cfg.tol.abs}};
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["p"] = r.p;
  j["n"] = r.n;
  j["classification"] = to_string(r.classification);
  j["verified"] = r.verified;
  j["best_margin"] = r.best_margin;
  j["verified_margin"] = r.verified_margin;
  j["tightened_margin"] = r.tightened_margin;
  j["conjecture_event"] = r.conjecture_event();
  j["theorem_violation"] = r.theorem_violation();
  j["best_restart"] = r.best_restart;
  j["iterations_used"] = r.iterations_used;
  j["total_iterations"] = r.total_iterations;
  Json history = Json::array();
  for (const auto& [it, m] : r.margin_history) history.push_back(Json::array({it, m}));
  j["margin_history"] = std::move(history);
  Json margins = Json::array();
  for (double m : r.restart_margins) {
    if (std::isnan(m)) {
      margins.push_back(nullptr);
    } else {
      margins.push_back(m);
    }
  }
  j["restart_margins"] = std::move(margins);
  Json skipped = Json::array();
  for (const auto& [idx, why] : r.skipped_restarts) skipped.push_back(Json{{"restart", idx}, {"reason", why}});
  j["skipped_restarts"] = std::move(skipped);
  j["config"] = to_json(r.config);
  j["best_family"] = r.best_family ? cyclicpd::to_json(*r.best_family) : Json(nullptr);
  return j;
}

}  // namespace cyclicpd::search
