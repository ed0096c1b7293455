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

#include "cyclicpd/cli/commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iostream>

#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/inequalities/fixture.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/random.hpp"
#include "cyclicpd/search/objective.hpp"
#include "cyclicpd/search/search.hpp"
#include "manifest.hpp"

namespace cyclicpd::cli {

namespace {

constexpr std::uint64_t kSampleStream = 0x53414d504c450000ULL;

Json fixture_s4_report(const Tolerance& tol) {
  const auto& fx = inequalities::counterexample_fixture();
  const inequalities::CheckReport r = inequalities::check_s4_decomposition(fx.a, fx.b, fx.c, fx.d, tol);
  const double trace = r.detail["trace_m"].get<double>();
  Json j = inequalities::to_json(r);
  j["expected_trace"] = inequalities::kExpectedTrace;
  j["trace_deviation"] = std::abs(trace - inequalities::kExpectedTrace);
  j["within_fixture_tol"] = std::abs(trace - inequalities::kExpectedTrace) <= inequalities::kFixtureTol;
  return j;
}

// Family objects, {"families": [...]}, a search result with "best_family",
// or a manifest whose results carry "best_family".
Json select_family(const Json& doc, int index) {
  auto pick = [&](const Json& list) -> const Json& {
    if (!list.is_array() || index < 0 || static_cast<std::size_t>(index) >= list.size()) {
      throw Error(ErrorCode::kParseError, "index " + std::to_string(index) + " out of range");
    }
    return list[static_cast<std::size_t>(index)];
  };
  if (doc.contains("members")) return doc;
  if (doc.contains("families")) return pick(doc["families"]);
  if (doc.contains("best_family")) return doc["best_family"];
  if (doc.contains("results")) {
    const Json& r = pick(doc["results"]);
    if (r.contains("best_family") && !r["best_family"].is_null()) return r["best_family"];
  }
  throw Error(ErrorCode::kParseError, "no family found in input");
}

}  // namespace

CommandOutcome cmd_reproduce(const ReproduceOptions& opts) {
  const bool eig = opts.case_name == "shapiro4-eig" || opts.case_name == "all";
  const bool trace = opts.case_name == "shapiro4-trace" || opts.case_name == "all";
  if (!eig && !trace) throw Error(ErrorCode::kInvalidArgument, "unknown case '" + opts.case_name + "'");

  Json config{{"case", opts.case_name}, {"tol", tolerance_json(opts.tol)}};
  RunManifest manifest("reproduce", config, 0);
  bool ok = true;
  Json summary;
  if (eig) {
    try {
      const inequalities::CheckReport r = inequalities::reproduce_counterexample(opts.tol);
      manifest.add_result(inequalities::to_json(r));
      summary["shapiro4-eig"] = Json{{"computed", inequalities::values_to_json(r.lhs)},
                                     {"expected", r.detail["expected"]},
                                     {"deviation", r.detail["deviation"]},
                                     {"eigenvalue_form_fails", !r.holds}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kFixtureMismatch) throw;
      ok = false;
      summary["shapiro4-eig"] = Json{{"error", e.what()}};
    }
  }
  if (trace) {
    Json r = fixture_s4_report(opts.tol);
    ok = ok && r["within_fixture_tol"].get<bool>() && r["holds"].get<bool>();
    summary["shapiro4-trace"] = Json{{"computed", r["detail"]["trace_m"]},
                                     {"expected", inequalities::kExpectedTrace},
                                     {"bound", r["rhs"]},
                                     {"holds", r["holds"]}};
    manifest.add_result(std::move(r));
  }
  summary["passed"] = ok;
  manifest.set_summary(summary);
  return {ok ? kExitOk : kExitFailure, manifest.finish()};
}

CommandOutcome cmd_search(const SearchOptions& opts) {
  search::SearchConfig cfg;
  cfg.p = opts.p;
  cfg.n = opts.n.value_or(1);
  cfg.restarts = opts.restarts;
  cfg.max_iters = opts.max_iters;
  cfg.step_init = opts.step_init;
  cfg.ridge = opts.ridge;
  cfg.master_seed = opts.seed;
  cfg.tol = opts.tol;
  cfg.workers = opts.workers;
  cfg.validate();

  const bool sweep = !opts.n && (opts.p == 12 || opts.p == 23);
  Json config = search::to_json(cfg);
  config["n"] = sweep ? Json::array({1, 2, 3}) : Json(cfg.n);
  RunManifest manifest("search", config, opts.seed);

  std::vector<search::SearchResult> results =
      sweep ? search::probe_conjecture(opts.p, cfg) : std::vector<search::SearchResult>{search::minimize_margin(cfg)};

  Json summary = Json::array();
  for (const auto& r : results) {
    Json s{{"p", r.p},
           {"n", r.n},
           {"best_margin", r.best_margin},
           {"verified_margin", r.verified_margin},
           {"classification", search::to_string(r.classification)},
           {"conjecture_event", r.conjecture_event()},
           {"theorem_violation", r.theorem_violation()}};
    if (r.best_family && r.classification == search::Classification::kVerifiedCounterexample &&
        opts.witness_dir) {
      std::filesystem::create_directories(*opts.witness_dir);
      const auto path = *opts.witness_dir / ("witness_p" + std::to_string(r.p) + "_n" +
                                             std::to_string(r.n) + ".json");
      write_json_file(path, to_json(*r.best_family));
      s["witness_file"] = path.string();
    }
    summary.push_back(std::move(s));
    manifest.add_result(search::to_json(r));
  }
  manifest.set_summary(Json{{"runs", summary}});
  return {kExitOk, manifest.finish()};
}

CommandOutcome cmd_eval(const EvalOptions& opts) {
  const CyclicFamily f = parse_family(select_family(read_json_file(opts.family_file), opts.index), opts.tol);
  Json out{{"expr", opts.expr}, {"p", f.p()}, {"n", f.dim()}};
  if (opts.expr == "Fp") {
    out["value"] = inequalities::eval_Fp(f);
  } else if (opts.expr == "margin") {
    out["value"] = search::shapiro_margin(f);
  } else if (opts.expr == "nesbitt_eigs") {
    const inequalities::CheckReport r = inequalities::check_nesbitt_k(f, opts.tol);
    out["value"] = inequalities::values_to_json(r.lhs);
    out["bound"] = r.rhs;
    out["holds"] = r.holds;
  } else if (opts.expr == "bidirectional") {
    const inequalities::CheckReport r = inequalities::check_bidirectional(f, opts.tol);
    out["value"] = r.lhs.front().real();
    out["forward"] = r.detail["forward"];
    out["reverse"] = r.detail["reverse"];
    out["bound"] = r.rhs;
    out["holds"] = r.holds;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown expr '" + opts.expr + "'");
  }
  return {kExitOk, out};
}

CommandOutcome cmd_sample(const SampleOptions& opts) {
  if (opts.n < 1 || opts.p < 1 || opts.count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n, p and count must be positive");
  }
  if (!(opts.ridge > 0.0)) throw Error(ErrorCode::kInvalidArgument, "ridge must be positive");
  const Field field = parse_field(opts.field);
  Json families = Json::array();
  for (int i = 0; i < opts.count; ++i) {
    RngStream rng = RngStream::derive(opts.seed, {kSampleStream, static_cast<std::uint64_t>(i)});
    families.push_back(to_json(random_family(opts.p, opts.n, rng, field, opts.ridge)));
  }
  if (opts.count == 1) return {kExitOk, families.front()};
  return {kExitOk, Json{{"families", std::move(families)}}};
}

namespace {

void add_tolerance(CLI::App* app, Tolerance& tol) {
  app->add_option("--tol-rel", tol.rel, "relative tolerance")->check(CLI::PositiveNumber);
  app->add_option("--tol-abs", tol.abs, "absolute tolerance")->check(CLI::PositiveNumber);
}

void emit(const CommandOutcome& outcome, const std::optional<std::filesystem::path>& path,
          std::ostream& out) {
  if (path) {
    write_json_file(*path, outcome.output);
    Json brief{{"written", path->string()}, {"exit_code", outcome.exit_code}};
    if (outcome.output.contains("summary")) brief["summary"] = outcome.output["summary"];
    out << brief.dump(2) << '\n';
  } else {
    out << outcome.output.dump(2) << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of cyclic-sum inequalities for positive definite matrices", "cyclicpd"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  VerifyOptions verify;
  std::string dims = "1..4";
  std::string ps = "3..6";
  auto* v = app.add_subcommand("verify", "run the property suites on random inputs");
  v->add_option("--suite", verify.suite)->check(CLI::IsMember({"unconditional", "conditional", "identities", "all"}));
  v->add_option("--dims", dims, "dimensions, e.g. 1..4 or 1,3");
  v->add_option("--p", ps, "family sizes, e.g. 3..6");
  v->add_option("--trials", verify.trials)->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed);
  v->add_option("--field", verify.field)->check(CLI::IsMember({"real", "complex", "both"}));
  v->add_option("--out", verify.out);
  v->add_option("--workers", verify.workers, "worker threads, 0 = automatic");
  add_tolerance(v, verify.tol);

  ReproduceOptions reproduce;
  auto* r = app.add_subcommand("reproduce", "reproduce the 2x2 four-matrix counterexample");
  r->add_option("--case", reproduce.case_name)->check(CLI::IsMember({"shapiro4-eig", "shapiro4-trace", "all"}));
  r->add_option("--out", reproduce.out);
  add_tolerance(r, reproduce.tol);

  SearchOptions search_opts;
  std::optional<int> search_n;
  auto* s = app.add_subcommand("search", "minimize F_p - p n / 2 over PD families");
  s->add_option("--p", search_opts.p)->required()->check(CLI::Range(3, 1000));
  s->add_option("--n", search_n)->check(CLI::Range(1, 500));
  s->add_option("--restarts", search_opts.restarts)->check(CLI::PositiveNumber);
  s->add_option("--max-iters", search_opts.max_iters)->check(CLI::PositiveNumber);
  s->add_option("--step-init", search_opts.step_init)->check(CLI::PositiveNumber);
  s->add_option("--ridge", search_opts.ridge)->check(CLI::PositiveNumber);
  s->add_option("--seed", search_opts.seed);
  s->add_option("--out", search_opts.out);
  s->add_option("--workers", search_opts.workers, "worker threads, 0 = automatic");
  s->add_option("--witness-dir", search_opts.witness_dir, "write verified counterexample families here");
  add_tolerance(s, search_opts.tol);

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "evaluate a quantity on a family file");
  e->add_option("family_file", eval.family_file)->required();
  e->add_option("--expr", eval.expr)->check(CLI::IsMember({"Fp", "margin", "nesbitt_eigs", "bidirectional"}));
  e->add_option("--index", eval.index);
  add_tolerance(e, eval.tol);

  SampleOptions sample;
  auto* sm = app.add_subcommand("sample", "write random PD families");
  sm->add_option("--n", sample.n)->check(CLI::PositiveNumber);
  sm->add_option("--p", sample.p)->check(CLI::PositiveNumber);
  sm->add_option("--count", sample.count)->check(CLI::PositiveNumber);
  sm->add_option("--seed", sample.seed);
  sm->add_option("--field", sample.field)->check(CLI::IsMember({"real", "complex"}));
  sm->add_option("--ridge", sample.ridge)->check(CLI::PositiveNumber);
  sm->add_option("--out", sample.out);
  add_tolerance(sm, sample.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion& ex) {
    out << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*v) {
      verify.dims = parse_int_range(dims);
      verify.p_values = parse_int_range(ps);
      const CommandOutcome o = cmd_verify(verify);
      emit(o, verify.out, out);
      return o.exit_code;
    }
    if (*r) {
      const CommandOutcome o = cmd_reproduce(reproduce);
      emit(o, reproduce.out, out);
      return o.exit_code;
    }
    if (*s) {
      search_opts.n = search_n;
      const CommandOutcome o = cmd_search(search_opts);
      for (const auto& res : o.output["results"]) {
        for (const auto& skipped : res["skipped_restarts"]) {
          err << "search: restart " << skipped["restart"] << " skipped: "
              << skipped["reason"].get<std::string>() << '\n';
        }
        if (res["conjecture_event"].get<bool>()) {
          err << "search: conjecture-relevant event at p=" << res["p"] << " n=" << res["n"]
              << " (verified margin " << res["verified_margin"] << ")\n";
        }
      }
      emit(o, search_opts.out, out);
      return o.exit_code;
    }
    if (*e) {
      const CommandOutcome o = cmd_eval(eval);
      emit(o, std::nullopt, out);
      return o.exit_code;
    }
    if (*sm) {
      const CommandOutcome o = cmd_sample(sample);
      emit(o, sample.out, out);
      return o.exit_code;
    }
  } catch (const Error& ex) {
    err << ex.what() << '\n';
    if (ex.code() == ErrorCode::kSoundnessViolation) return kExitFailure;
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace cyclicpd::cli
