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

#include <cmath>

#include "../oracles.hpp"
#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/inequalities/fixture.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/random.hpp"
#include "cyclicpd/search/objective.hpp"
#include "cyclicpd/search/search.hpp"

namespace cyclicpd::search {
namespace {

using testing::scalar_family;
using testing::scalar_shapiro;

std::vector<RMatrix> random_factors(int p, int n, RngStream& rng) {
  std::vector<RMatrix> out;
  for (int i = 0; i < p; ++i) {
    RMatrix l = RMatrix::Zero(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c <= r; ++c) l(r, c) = rng.normal();
      l(r, r) = 0.5 + std::abs(l(r, r));
    }
    out.push_back(l);
  }
  return out;
}

double fd_entry(std::vector<RMatrix> l, int i, int r, int c, double ridge, double h) {
  l[i](r, c) += h;
  const double up = margin_from_factors(l, ridge);
  l[i](r, c) -= 2 * h;
  const double down = margin_from_factors(l, ridge);
  return (up - down) / (2 * h);
}

TEST_CASE("shapiro_margin examples") {
  CHECK(std::abs(shapiro_margin(CyclicFamily::identity(5, 3))) < 1e-14);
  const double fx = shapiro_margin(inequalities::counterexample_fixture().family());
  CHECK(std::abs(fx - (inequalities::kExpectedTrace - 4.0)) <= inequalities::kFixtureTol);
  CHECK(shapiro_margin(scalar_family({1, 2, 3})) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("gradient at identity factors is the same for every member") {
  for (int p : {3, 4, 7}) {
    for (int n : {1, 2, 3}) {
      std::vector<RMatrix> l(static_cast<std::size_t>(p), RMatrix::Identity(n, n));
      const auto g = margin_gradient(l, 0.0);
      for (int i = 1; i < p; ++i) CHECK((g[i] - g[0]).norm() <= 1e-12);
    }
  }
}

TEST_CASE("gradient matches the hand-differentiated scalar formula") {
  // S_3 = a/(b+c) + b/(c+a) + c/(a+b), a = x^2 etc.
  RngStream rng(41);
  for (int t = 0; t < 20; ++t) {
    const double x = 0.5 + rng.uniform(0, 2), y = 0.5 + rng.uniform(0, 2), z = 0.5 + rng.uniform(0, 2);
    const double a = x * x, b = y * y, c = z * z;
    const double da = 1 / (b + c) - b / ((c + a) * (c + a)) - c / ((a + b) * (a + b));
    const double db = 1 / (c + a) - c / ((a + b) * (a + b)) - a / ((b + c) * (b + c));
    const double dc = 1 / (a + b) - a / ((b + c) * (b + c)) - b / ((c + a) * (c + a));
    const std::vector<RMatrix> l = {RMatrix::Constant(1, 1, x), RMatrix::Constant(1, 1, y),
                                    RMatrix::Constant(1, 1, z)};
    const auto g = margin_gradient(l, 0.0);
    CHECK(g[0](0, 0) == doctest::Approx(2 * x * da).epsilon(1e-12));
    CHECK(g[1](0, 0) == doctest::Approx(2 * y * db).epsilon(1e-12));
    CHECK(g[2](0, 0) == doctest::Approx(2 * z * dc).epsilon(1e-12));
  }
}

TEST_CASE("gradient matches central differences") {
  RngStream rng(43);
  for (int t = 0; t < 30; ++t) {
    const int p = 3 + t % 4;
    const int n = 1 + t % 3;
    const auto l = random_factors(p, n, rng);
    const auto g = margin_gradient(l, 1e-8);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < p; ++i) {
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c <= r; ++c) {
          const double fd = fd_entry(l, i, r, c, 1e-8, 1e-5);
          num = std::max(num, std::abs(fd - g[i](r, c)));
          den = std::max(den, std::abs(g[i](r, c)));
        }
        for (int c = r + 1; c < n; ++c) CHECK(g[i](r, c) == 0.0);
      }
    }
    CHECK(num <= 1e-6 * std::max(1.0, den));
  }
}

TEST_CASE("diagonal_embed examples") {
  const std::vector<double> ones = {1, 1, 1};
  CHECK(inequalities::eval_Fp(diagonal_embed(ones, 2)) == doctest::Approx(3.0).epsilon(1e-14));
  const std::vector<double> a = {1, 2, 3};
  CHECK(inequalities::eval_Fp(diagonal_embed(a, 1)) == doctest::Approx(1.7).epsilon(1e-14));
  RngStream rng(47);
  std::vector<double> s(9);
  for (auto& v : s) v = std::exp(rng.uniform(-2, 2));
  for (int n : {1, 2, 4}) {
    CHECK(inequalities::eval_Fp(diagonal_embed(s, n)) == doctest::Approx(n * scalar_shapiro(s)).epsilon(1e-12));
  }
  const std::vector<double> bad = {1, -1, 1};
  CHECK_THROWS_AS(diagonal_embed(bad, 2), Error);
}

TEST_CASE("restart history is monotone and ends at the reported margin") {
  SearchConfig cfg;
  cfg.p = 6;
  cfg.n = 2;
  cfg.max_iters = 600;
  cfg.master_seed = 5;
  for (int r = 0; r < 3; ++r) {
    const RestartOutcome o = run_restart(cfg, r);
    REQUIRE_FALSE(o.history.empty());
    for (std::size_t k = 1; k < o.history.size(); ++k) {
      CHECK(o.history[k].second <= o.history[k - 1].second);
      CHECK(o.history[k].first > o.history[k - 1].first);
    }
    CHECK(o.history.back().second == o.margin);
    CHECK(o.margin == margin_from_factors(o.factors, cfg.ridge));
  }
}

TEST_CASE("nesbitt regime yields no counterexample") {
  for (int n : {1, 2}) {
    SearchConfig cfg;
    cfg.p = 3;
    cfg.n = n;
    cfg.restarts = 8;
    cfg.max_iters = 3000;
    const SearchResult r = minimize_margin(cfg);
    CHECK(r.best_margin >= -1e-9);
    CHECK(r.verified_margin >= -1e-9);
    CHECK(r.classification != Classification::kVerifiedCounterexample);
    CHECK_FALSE(r.theorem_violation());
  }
}

TEST_CASE("search is independent of worker count") {
  SearchConfig cfg;
  cfg.p = 5;
  cfg.n = 2;
  cfg.restarts = 4;
  cfg.max_iters = 500;
  cfg.master_seed = 99;
  cfg.workers = 1;
  const Json one = to_json(minimize_margin(cfg));
  cfg.workers = 3;
  const Json three = to_json(minimize_margin(cfg));
  CHECK(one.dump() == three.dump());
}

TEST_CASE("verified margin is recomputed from the serialized family") {
  SearchConfig cfg;
  cfg.p = 4;
  cfg.n = 2;
  cfg.restarts = 2;
  cfg.max_iters = 300;
  const SearchResult r = minimize_margin(cfg);
  REQUIRE(r.best_family.has_value());
  const CyclicFamily g = parse_family(Json::parse(to_json(*r.best_family).dump()));
  const double recomputed = inequalities::eval_Fp(g) - cfg.p * cfg.n / 2.0;
  CHECK(std::abs(recomputed - r.best_margin) <= 1e-9 * (1.0 + std::abs(inequalities::eval_Fp(g))));
  CHECK(r.verified_margin == recomputed);
}

TEST_CASE("config validation") {
  SearchConfig cfg;
  cfg.p = 2;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.p = 3;
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.restarts = 1;
  cfg.ridge = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

}  // namespace
}  // namespace cyclicpd::search
