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

#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cyclicpd/cli/commands.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/serialize.hpp"

namespace cyclicpd::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclicpd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cyclicpd_cli_test_" + name);
}

TEST_CASE("parse_int_range") {
  CHECK(parse_int_range("3") == std::vector<int>{3});
  CHECK(parse_int_range("1..4") == std::vector<int>{1, 2, 3, 4});
  CHECK(parse_int_range("3,5,7") == std::vector<int>{3, 5, 7});
  CHECK_THROWS_AS(parse_int_range("4..1"), Error);
  CHECK_THROWS_AS(parse_int_range("x"), Error);
  CHECK_THROWS_AS(parse_int_range(""), Error);
}

TEST_CASE("reproduce exits 0 and reports the complex pair") {
  const Run r = run({"reproduce", "--case", "all"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "reproduce");
  CHECK(j["summary"]["passed"].get<bool>());
  CHECK(j["summary"]["shapiro4-eig"]["eigenvalue_form_fails"].get<bool>());
}

TEST_CASE("argument errors exit 2") {
  CHECK(run({}).code == kExitConfig);
  CHECK(run({"bogus"}).code == kExitConfig);
  CHECK(run({"search"}).code == kExitConfig);
  CHECK(run({"search", "--p", "2"}).code == kExitConfig);
  CHECK(run({"verify", "--dims", "0..x"}).code == kExitConfig);
  CHECK(run({"eval", temp_path("missing.json").string()}).code == kExitConfig);
}

TEST_CASE("sample then eval round trip") {
  const auto path = temp_path("sample.json");
  const Run s = run({"sample", "--n", "2", "--p", "4", "--seed", "3", "--out", path.string()});
  REQUIRE(s.code == kExitOk);
  const CyclicFamily f = parse_family(read_json_file(path));
  CHECK(f.p() == 4);
  CHECK(f.dim() == 2);
  for (const std::string expr : {"Fp", "margin", "nesbitt_eigs", "bidirectional"}) {
    const Run e = run({"eval", path.string(), "--expr", expr});
    CHECK(e.code == kExitOk);
    CHECK(Json::parse(e.out).contains("value"));
  }
  const Json fp = Json::parse(run({"eval", path.string()}).out);
  const Json margin = Json::parse(run({"eval", path.string(), "--expr", "margin"}).out);
  CHECK(margin["value"].get<double>() == doctest::Approx(fp["value"].get<double>() - 4.0));

  const Run again = run({"sample", "--n", "2", "--p", "4", "--seed", "3"});
  CHECK(Json::parse(again.out) == read_json_file(path));
  std::filesystem::remove(path);
}

TEST_CASE("eval picks families out of multi-family files") {
  const auto path = temp_path("many.json");
  REQUIRE(run({"sample", "--count", "3", "--p", "3", "--n", "1", "--out", path.string()}).code == kExitOk);
  const Json doc = read_json_file(path);
  REQUIRE(doc["families"].size() == 3);
  const Run e = run({"eval", path.string(), "--index", "2"});
  CHECK(e.code == kExitOk);
  CHECK(run({"eval", path.string(), "--index", "5"}).code == kExitConfig);
  std::filesystem::remove(path);
}

TEST_CASE("verify on a small grid is replayable") {
  const std::vector<std::string> args = {"verify", "--dims", "1..2", "--p", "3..4", "--trials", "5", "--seed", "8"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == kExitOk);
  CHECK(strip_timestamps(Json::parse(a.out)) == strip_timestamps(Json::parse(b.out)));
  const Json j = Json::parse(a.out);
  CHECK_FALSE(strip_timestamps(j).contains("started"));
  CHECK_FALSE(strip_timestamps(j).contains("elapsed_ms"));
}

TEST_CASE("search writes replayable witnesses") {
  const auto dir = temp_path("witness");
  std::filesystem::remove_all(dir);
  const Run r = run({"search", "--p", "14", "--n", "1", "--restarts", "16", "--seed", "0", "--witness-dir",
                     dir.string()});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  const Json& run0 = j["summary"]["runs"][0];
  if (run0["classification"] == "verified-counterexample") {
    const std::string file = run0["witness_file"].get<std::string>();
    const Json e = Json::parse(run({"eval", file, "--expr", "margin"}).out);
    CHECK(e["value"].get<double>() == run0["verified_margin"].get<double>());
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace cyclicpd::cli
