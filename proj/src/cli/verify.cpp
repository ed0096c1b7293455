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

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "cyclicpd/cli/commands.hpp"
#include "cyclicpd/inequalities/certificates.hpp"
#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/parallel.hpp"
#include "cyclicpd/pdcore/random.hpp"
#include "manifest.hpp"

namespace cyclicpd::cli {

namespace {

using inequalities::CheckReport;

enum class Suite { kUnconditional, kConditional, kIdentities };

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kUnconditional: return "unconditional";
    case Suite::kConditional: return "conditional";
    case Suite::kIdentities: return "identities";
  }
  return "";
}

struct TrialInput {
  RngStream& rng;
  Field field;
  int n;
  int p;
  int trial;
  const Tolerance& tol;

  PDMatrix pd() { return random_pd(n, rng, field); }
  CyclicFamily family() { return random_family(p, n, rng, field); }
  CMatrix rect() { return random_matrix(n, 1 + trial % 3, rng, field); }
};

struct CheckSpec {
  std::string name;
  Suite suite;
  int min_p;  // 0: not a family check
  std::function<CheckReport(TrialInput&)> run;
};

std::vector<CheckSpec> catalogue() {
  using namespace inequalities;
  std::vector<CheckSpec> c;
  const auto u = Suite::kUnconditional;
  c.push_back({"trace_product", u, 0, [](TrialInput& in) {
                 const PDMatrix a = in.pd();
                 const PDMatrix b = in.pd();
                 return check_trace_product(a.herm(), b.herm(), in.tol);
               }});
  c.push_back({"weighted_cs", u, 0, [](TrialInput& in) {
                 const CMatrix x = in.rect();
                 const CMatrix y = random_matrix(in.n, static_cast<int>(x.cols()), in.rng, in.field);
                 return check_weighted_cs(x, y, in.pd(), in.tol);
               }});
  c.push_back({"eigineq1", u, 0, [](TrialInput& in) {
                 const PDMatrix a = in.pd();
                 return check_eigineq1(a, in.pd(), in.tol);
               }});
  c.push_back({"harmonic_loewner", u, 1, [](TrialInput& in) { return check_harmonic_loewner(in.family(), in.tol); }});
  c.push_back({"product_sum_eigs", u, 1, [](TrialInput& in) { return check_product_sum_eigs(in.family(), in.tol); }});
  c.push_back({"nesbitt", u, 0, [](TrialInput& in) {
                 const CyclicFamily f = random_family(3, in.n, in.rng, in.field);
                 return check_nesbitt(f[0], f[1], f[2], in.tol);
               }});
  c.push_back({"nesbitt_k", u, 2, [](TrialInput& in) { return check_nesbitt_k(in.family(), in.tol); }});
  c.push_back({"s4_decomposition", u, 0, [](TrialInput& in) {
                 const CyclicFamily f = random_family(4, in.n, in.rng, in.field);
                 return check_s4_decomposition(f[0], f[1], f[2], f[3], in.tol);
               }});
  c.push_back({"shapiro_extension", u, 3, [](TrialInput& in) { return check_shapiro_extension(in.family(), in.tol); }});
  c.push_back({"bidirectional", u, 3, [](TrialInput& in) { return check_bidirectional(in.family(), in.tol); }});
  c.push_back({"bidirectional_eig4", u, 0, [](TrialInput& in) {
                 const CyclicFamily f = random_family(4, in.n, in.rng, in.field);
                 return check_bidirectional_eig4(f[0], f[1], f[2], f[3], in.tol);
               }});
  c.push_back({"cs_trace", u, 0, [](TrialInput& in) {
                 const CMatrix a = in.rect();
                 const CMatrix b = random_matrix(in.n, static_cast<int>(a.cols()), in.rng, in.field);
                 return check_cs_trace(a, b, in.tol);
               }});
  c.push_back({"upper_bound_2ab", u, 0, [](TrialInput& in) {
                 const CyclicFamily f = random_family(3, in.n, in.rng, in.field);
                 return check_upper_bound_2ab(f[0], f[1], f[2], in.tol);
               }});
  c.push_back({"square_cycle", u, 1, [](TrialInput& in) { return check_square_cycle(in.family(), in.tol); }});

  c.push_back({"shapiro_trace", Suite::kConditional, 3,
               [](TrialInput& in) { return check_shapiro_trace(in.family(), in.tol); }});

  const auto id = Suite::kIdentities;
  c.push_back({"identity_n_plus_p_4i", id, 0, [](TrialInput& in) {
                 const CyclicFamily f = random_family(4, in.n, in.rng, in.field);
                 const CheckReport r = check_s4_decomposition(f[0], f[1], f[2], f[3], in.tol);
                 return identity_report("identity_n_plus_p_4i", in.n, 4,
                                        r.detail["n_plus_p_residual"].get<double>(), in.tol);
               }});
  c.push_back({"identity_2m_plus_n_3i", id, 0, [](TrialInput& in) {
                 const CyclicFamily f = random_family(3, in.n, in.rng, in.field);
                 const CheckReport r = check_upper_bound_2ab(f[0], f[1], f[2], in.tol);
                 return identity_report("identity_2m_plus_n_3i", in.n, 3,
                                        r.detail["two_m_plus_n_residual"].get<double>(), in.tol);
               }});
  c.push_back({"identity_wz_sum", id, 0, [](TrialInput& in) {
                 const CyclicFamily f = random_family(3, in.n, in.rng, in.field);
                 const Certificate cert = build_wz_certificate(f[0], f[1], f[2], in.tol);
                 return identity_report("identity_wz_sum", in.n, 3, cert.value("wz_residual"), in.tol);
               }});
  c.push_back({"identity_square_cycle_wz", id, 1, [](TrialInput& in) {
                 const Certificate cert = build_square_cycle_certificate(in.family());
                 const double residual = std::max(cert.value("wz_residual"), cert.value("zz_residual"));
                 return identity_report("identity_square_cycle_wz", in.n, in.p, residual, in.tol);
               }});
  c.push_back({"identity_extension", id, 3, [](TrialInput& in) {
                 const CheckReport r = check_shapiro_extension(in.family(), in.tol);
                 return identity_report("identity_extension", in.n, in.p,
                                        r.detail["relative_residual"].get<double>(), in.tol);
               }});
  return c;
}

std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct TrialResult {
  std::optional<CheckReport> report;
  std::string error;
  Json family;  // only for conditional counterexample events
};

constexpr std::size_t kMaxEventsPerGroup = 10;

}  // namespace

CommandOutcome cmd_verify(const VerifyOptions& opts) {
  std::vector<Suite> suites;
  if (opts.suite == "unconditional" || opts.suite == "all") suites.push_back(Suite::kUnconditional);
  if (opts.suite == "conditional" || opts.suite == "all") suites.push_back(Suite::kConditional);
  if (opts.suite == "identities" || opts.suite == "all") suites.push_back(Suite::kIdentities);
  if (suites.empty()) throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + opts.suite + "'");
  std::vector<Field> fields;
  if (opts.field == "real" || opts.field == "both") fields.push_back(Field::kReal);
  if (opts.field == "complex" || opts.field == "both") fields.push_back(Field::kComplex);
  if (fields.empty()) throw Error(ErrorCode::kInvalidArgument, "unknown field '" + opts.field + "'");
  if (opts.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  for (int n : opts.dims) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "dimensions must be positive");
  }
  for (int p : opts.p_values) {
    if (p < 1) throw Error(ErrorCode::kInvalidArgument, "p values must be positive");
  }

  Json config;
  config["suite"] = opts.suite;
  config["dims"] = opts.dims;
  config["p"] = opts.p_values;
  config["trials"] = opts.trials;
  config["seed"] = opts.seed;
  config["field"] = opts.field;
  config["tol"] = tolerance_json(opts.tol);
  if (opts.out) config["out"] = opts.out->string();
  RunManifest manifest("verify", config, opts.seed);

  long unconditional_failures = 0;
  long identity_failures = 0;
  long conditional_events = 0;
  long errors = 0;
  long groups = 0;
  const unsigned workers = opts.workers == 0 ? worker_count() : opts.workers;

  for (const CheckSpec& spec : catalogue()) {
    if (std::find(suites.begin(), suites.end(), spec.suite) == suites.end()) continue;
    std::vector<int> ps{0};
    if (spec.min_p > 0) {
      ps.clear();
      for (int p : opts.p_values) {
        if (p >= spec.min_p) ps.push_back(p);
      }
    }
    for (Field field : fields) {
      for (int n : opts.dims) {
        for (int p : ps) {
          std::vector<TrialResult> trials(static_cast<std::size_t>(opts.trials));
          parallel_for(
              trials.size(),
              [&](std::size_t t) {
                RngStream rng = RngStream::derive(
                    opts.seed, {name_hash(spec.name), static_cast<std::uint64_t>(field),
                                static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p), t});
                TrialInput in{rng, field, n, p, static_cast<int>(t), opts.tol};
                try {
                  trials[t].report = spec.run(in);
                  if (spec.suite == Suite::kConditional && !trials[t].report->holds) {
                    RngStream replay = RngStream::derive(
                        opts.seed, {name_hash(spec.name), static_cast<std::uint64_t>(field),
                                    static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p), t});
                    trials[t].family = to_json(random_family(p, n, replay, field));
                  }
                } catch (const std::exception& e) {
                  trials[t].error = e.what();
                }
              },
              workers);

          ++groups;
          long failures = 0;
          long group_errors = 0;
          const CheckReport* worst = nullptr;
          Json events = Json::array();
          Json error_list = Json::array();
          for (std::size_t t = 0; t < trials.size(); ++t) {
            const TrialResult& tr = trials[t];
            if (!tr.report) {
              ++group_errors;
              if (error_list.size() < kMaxEventsPerGroup) {
                error_list.push_back(Json{{"trial", t}, {"error", tr.error}});
              }
              continue;
            }
            if (!tr.report->holds) {
              ++failures;
              if (spec.suite == Suite::kConditional && events.size() < kMaxEventsPerGroup) {
                events.push_back(Json{{"trial", t}, {"report", inequalities::to_json(*tr.report)},
                                      {"family", tr.family}});
              }
            }
            if (worst == nullptr || tr.report->relative_margin() < worst->relative_margin()) {
              worst = &*tr.report;
            }
          }
          errors += group_errors;
          switch (spec.suite) {
            case Suite::kUnconditional: unconditional_failures += failures + group_errors; break;
            case Suite::kIdentities: identity_failures += failures + group_errors; break;
            case Suite::kConditional:
              conditional_events += failures;
              unconditional_failures += group_errors;
              break;
          }

          Json g;
          g["suite"] = suite_name(spec.suite);
          g["check"] = spec.name;
          g["field"] = field_name(field);
          g["n"] = n;
          g["p"] = p;
          g["trials"] = opts.trials;
          g["failures"] = failures;
          g["errors"] = group_errors;
          g["worst"] = worst ? inequalities::to_json(*worst) : Json(nullptr);
          if (spec.suite == Suite::kConditional) g["counterexample_events"] = events;
          if (!error_list.empty()) g["error_samples"] = error_list;
          manifest.add_result(std::move(g));
        }
      }
    }
  }

  Json summary;
  summary["groups"] = groups;
  summary["unconditional_failures"] = unconditional_failures;
  summary["identity_failures"] = identity_failures;
  summary["conditional_counterexample_events"] = conditional_events;
  summary["errors"] = errors;
  const bool ok = unconditional_failures == 0 && identity_failures == 0;
  summary["passed"] = ok;
  manifest.set_summary(summary);
  return {ok ? kExitOk : kExitFailure, manifest.finish()};
}

}  // namespace cyclicpd::cli
