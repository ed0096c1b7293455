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
#include "cyclicpd/inequalities/certificates.hpp"
#include "cyclicpd/inequalities/checks.hpp"
#include "cyclicpd/inequalities/fixture.hpp"
#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/functions.hpp"
#include "cyclicpd/pdcore/random.hpp"
#include "cyclicpd/pdcore/spectrum.hpp"

namespace cyclicpd::inequalities {
namespace {

using testing::identity_family;
using testing::lu_inverse;
using testing::scalar_family;
using testing::scalar_shapiro;

constexpr double kExact = 1e-12;

PDMatrix scalar_pd(double v) { return make_pd(RMatrix(RMatrix::Constant(1, 1, v))); }
PDMatrix eye_pd(int n) { return PDMatrix::identity(n); }
PDMatrix scaled_eye(int n, double s) { return make_pd(RMatrix(s * RMatrix::Identity(n, n))); }

double lhs0(const CheckReport& r) { return r.lhs.front().real(); }

TEST_CASE("trace_product") {
  const CheckReport r = check_trace_product(HermMatrix::identity(2), HermMatrix::identity(2));
  CHECK(r.holds);
  CHECK(r.detail["trace_ab"].get<double>() == doctest::Approx(2.0));
  CHECK(r.rhs == doctest::Approx(4.0));

  RMatrix a = RMatrix::Zero(2, 2);
  RMatrix b = RMatrix::Zero(2, 2);
  a(0, 0) = 1;
  b(1, 1) = 1;
  const CheckReport z = check_trace_product(HermMatrix::from_entries(a), HermMatrix::from_entries(b));
  CHECK(z.holds);
  CHECK(std::abs(z.detail["trace_ab"].get<double>()) < kExact);

  RngStream rng(1);
  const PDMatrix x = random_pd(4, rng, Field::kReal);
  const PDMatrix y = random_pd(4, rng, Field::kReal);
  const CheckReport q = check_trace_product(x.herm(), y.herm());
  CHECK(q.holds);
  CHECK(q.detail["trace_ab"].get<double>() ==
        doctest::Approx((x.entries() * y.entries()).trace().real()).epsilon(1e-12));
}

TEST_CASE("weighted_cs") {
  for (int n : {1, 2, 3}) {
    const CMatrix i = CMatrix::Identity(n, n);
    const CheckReport r = check_weighted_cs(i, i, eye_pd(n));
    CHECK(r.holds);
    CHECK(std::abs(r.margin) < kExact);
    CHECK(r.detail["trace_xy_abs2"].get<double>() == doctest::Approx(n * n));
  }
  const CheckReport zero = check_weighted_cs(CMatrix::Identity(2, 2), CMatrix::Zero(2, 2), eye_pd(2));
  CHECK(zero.holds);

  RngStream rng(2);
  const CMatrix x = random_matrix(3, 2, rng, Field::kReal);
  const CMatrix y = random_matrix(3, 2, rng, Field::kReal);
  const PDMatrix a = random_pd(3, rng, Field::kReal);
  const CheckReport q = check_weighted_cs(x, y, a);
  CHECK(q.holds);
  const double lhs = std::norm((x.adjoint() * y).trace());
  const double rhs = (x.adjoint() * a.entries() * x).trace().real() *
                     (y.adjoint() * lu_inverse(a.entries()) * y).trace().real();
  CHECK(q.detail["trace_xy_abs2"].get<double>() == doctest::Approx(lhs).epsilon(1e-10));
  CHECK(q.margin == doctest::Approx(rhs - lhs).epsilon(1e-8));
}

TEST_CASE("cs_trace") {
  RngStream rng(3);
  const CMatrix a = random_matrix(2, 3, rng, Field::kComplex);
  const CheckReport eq = check_cs_trace(a, a);
  CHECK(eq.holds);
  CHECK(std::abs(eq.margin) <= 1e-10 * (1.0 + std::pow(a.squaredNorm(), 2)));
  CHECK(check_cs_trace(a, CMatrix::Zero(2, 3)).holds);
  const CMatrix b = random_matrix(2, 3, rng, Field::kComplex);
  const CheckReport r = check_cs_trace(a, b);
  CHECK(r.holds);
  CHECK(r.detail["trace_abstar_abs2"].get<double>() ==
        doctest::Approx(std::norm((a * b.adjoint()).trace())).epsilon(1e-12));
}

TEST_CASE("eigineq1") {
  RngStream rng(4);
  const PDMatrix a = random_pd(3, rng, Field::kComplex);
  const CheckReport same = check_eigineq1(a, a);
  CHECK(same.holds);
  for (const auto& v : same.lhs) CHECK(std::abs(v) < 1e-9);

  const CheckReport two = check_eigineq1(scaled_eye(2, 2.0), eye_pd(2));
  CHECK(two.holds);
  for (const auto& v : two.lhs) CHECK(std::abs(v - 0.5) < kExact);

  for (int t = 0; t < 50; ++t) {
    const PDMatrix x = random_pd(3, rng, Field::kReal);
    const PDMatrix y = random_pd(3, rng, Field::kReal);
    const CheckReport r = check_eigineq1(x, y);
    CHECK(r.holds);
    CHECK(r.detail["path_discrepancy"].get<double>() <= 1e-8);
  }
}

TEST_CASE("harmonic_loewner") {
  RngStream rng(5);
  const CyclicFamily one({random_pd(2, rng, Field::kReal)});
  const CheckReport r1 = check_harmonic_loewner(one);
  CHECK(r1.holds);
  CHECK(std::abs(r1.margin) < 1e-9);

  for (int p : {1, 3, 5}) {
    const CheckReport r = check_harmonic_loewner(identity_family(p, 3));
    CHECK(r.holds);
    CHECK(std::abs(r.margin) < kExact);
  }

  const CheckReport s = check_harmonic_loewner(scalar_family({1, 2, 3}));
  CHECK(s.holds);
  CHECK(s.margin == doctest::Approx(11.0 / 6.0 - 9.0 / 6.0).epsilon(1e-12));

  for (int t = 0; t < 50; ++t) {
    const CyclicFamily f = random_family(2 + t % 4, 1 + t % 3, rng, Field::kComplex);
    const CheckReport r = check_harmonic_loewner(f);
    CHECK(r.holds);
    CHECK(r.detail["block_psd"].get<bool>());
    const double d = std::abs(r.detail["schur_margin"].get<double>() - r.detail["loewner_margin"].get<double>());
    CHECK(d <= 1e-8 * (1.0 + std::abs(r.margin)));
  }
}

TEST_CASE("block certificate examples") {
  const Certificate c1 = build_block_certificate(identity_family(1, 1));
  CHECK(c1.valid);
  const Spectrum s = eig_herm(HermMatrix::symmetrize(c1.block("M")));
  CHECK(std::abs(s.values[0]) < kExact);
  CHECK(std::abs(s.values[1] - 2.0) < kExact);

  const Certificate c2 = build_block_certificate(identity_family(2, 1));
  CHECK(c2.valid);
  CHECK((c2.block("M") - CMatrix::Constant(2, 2, 2.0)).norm() < kExact);
  CHECK(std::abs(c2.value("schur_margin")) < kExact);
}

TEST_CASE("product_sum_eigs") {
  const CheckReport r = check_product_sum_eigs(identity_family(4, 2));
  CHECK(r.holds);
  for (const auto& v : r.lhs) CHECK(std::abs(v - 16.0) < kExact);
  RngStream rng(6);
  const CheckReport one = check_product_sum_eigs(CyclicFamily({random_pd(3, rng, Field::kReal)}));
  for (const auto& v : one.lhs) CHECK(std::abs(v - 1.0) < 1e-9);
  const CheckReport s = check_product_sum_eigs(scalar_family({1, 4}));
  CHECK(lhs0(s) == doctest::Approx(5.0 * 1.25).epsilon(1e-12));
}

TEST_CASE("nesbitt") {
  for (int n : {1, 2, 4}) {
    const CheckReport r = check_nesbitt(eye_pd(n), eye_pd(n), eye_pd(n));
    CHECK(r.holds);
    for (const auto& v : r.lhs) CHECK(std::abs(v - 1.5) < kExact);
  }
  const CheckReport s = check_nesbitt(scalar_pd(1), scalar_pd(2), scalar_pd(3));
  CHECK(lhs0(s) == doctest::Approx(1.0 / 5 + 2.0 / 4 + 3.0 / 3).epsilon(1e-12));

  RngStream rng(7);
  for (int t = 0; t < 50; ++t) {
    const PDMatrix a = random_pd(3, rng, Field::kReal);
    const PDMatrix b = random_pd(3, rng, Field::kReal);
    const PDMatrix c = random_pd(3, rng, Field::kReal);
    const CheckReport r = check_nesbitt(a, b, c);
    CHECK(r.holds);
    CHECK(r.detail["identity_discrepancy"].get<double>() <= 1e-9);
    const CMatrix direct = a.entries() * lu_inverse(b.entries() + c.entries()) +
                           b.entries() * lu_inverse(c.entries() + a.entries()) +
                           c.entries() * lu_inverse(a.entries() + b.entries());
    const auto eig = eig_general(direct).real_parts();
    CHECK(std::abs(eig.front() - lhs0(r)) <= 1e-8 * (1.0 + eig.back()));
  }
}

TEST_CASE("nesbitt_k") {
  for (int k : {2, 3, 5}) {
    const CheckReport r = check_nesbitt_k(identity_family(k, 2));
    CHECK(r.holds);
    for (const auto& v : r.lhs) CHECK(std::abs(v - k / (k - 1.0)) < kExact);
  }
  RngStream rng(8);
  const PDMatrix a = random_pd(2, rng, Field::kComplex);
  const PDMatrix b = random_pd(2, rng, Field::kComplex);
  const PDMatrix c = random_pd(2, rng, Field::kComplex);
  CHECK(check_nesbitt(a, b, c).margin == check_nesbitt_k(CyclicFamily({a, b, c})).margin);

  const CheckReport s = check_nesbitt_k(scalar_family({1, 1, 1, 2}));
  CHECK(lhs0(s) == doctest::Approx(17.0 / 12.0).epsilon(1e-12));
  CHECK(s.rhs == doctest::Approx(4.0 / 3.0));

  const CheckReport two = check_nesbitt_k(CyclicFamily({a, b}));
  CHECK(two.holds);
  CHECK(two.rhs == doctest::Approx(2.0));
  try {
    check_nesbitt_k(CyclicFamily({a}));
    FAIL("k = 1 must be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSingularDenominator);
  }
}

TEST_CASE("eval_Fp closed forms and scalar oracle") {
  for (int p : {3, 4, 7}) {
    for (int n : {1, 3}) CHECK(eval_Fp(identity_family(p, n)) == doctest::Approx(p * n / 2.0).epsilon(1e-14));
  }
  CHECK(eval_Fp(scalar_family({1, 1, 1, 1})) == doctest::Approx(2.0));
  CHECK(std::abs(eval_Fp(counterexample_fixture().family()) - kExpectedTrace) <= kFixtureTol);

  RngStream rng(9);
  for (int p = 3; p <= 14; ++p) {
    for (int t = 0; t < 100; ++t) {
      std::vector<double> a(static_cast<std::size_t>(p));
      for (auto& v : a) v = std::exp(rng.uniform(-3.0, 3.0));
      const double expect = scalar_shapiro(a);
      CHECK(std::abs(eval_Fp(scalar_family(a)) - expect) <= 1e-12 * expect);
    }
  }
  CHECK_THROWS_AS(eval_Fp(identity_family(2, 1)), Error);
}

TEST_CASE("scalar validity set") {
  for (int p = 3; p <= 13; ++p) CHECK(scalar_shapiro_holds(p));
  for (int p : {15, 17, 19, 21, 23}) CHECK(scalar_shapiro_holds(p));
  for (int p : {14, 16, 18, 20, 22, 24, 25, 26}) CHECK_FALSE(scalar_shapiro_holds(p));
}

TEST_CASE("shapiro_trace") {
  const CheckReport id = check_shapiro_trace(identity_family(6, 2));
  CHECK(id.holds);
  CHECK(std::abs(id.margin) < kExact);
  const CheckReport fx = check_shapiro_trace(counterexample_fixture().family());
  CHECK(fx.holds);
  CHECK(std::abs(lhs0(fx) - kExpectedTrace) <= kFixtureTol);
  CHECK(fx.rhs == doctest::Approx(4.0));

  RngStream rng(10);
  for (int p : {3, 5, 8, 12, 13, 23}) {
    for (int t = 0; t < 200; ++t) {
      std::vector<double> a(static_cast<std::size_t>(p));
      for (auto& v : a) v = std::exp(rng.uniform(-2.0, 2.0));
      CHECK(check_shapiro_trace(scalar_family(a)).holds);
    }
  }
}

TEST_CASE("s4_decomposition") {
  for (int n : {1, 2, 3}) {
    const CheckReport r = check_s4_decomposition(eye_pd(n), eye_pd(n), eye_pd(n), eye_pd(n));
    CHECK(r.holds);
    CHECK(std::abs(r.detail["trace_m"].get<double>() - 2.0 * n) < kExact);
    CHECK(std::abs(r.margin) < kExact);
  }
  const auto& fx = counterexample_fixture();
  const CheckReport f = check_s4_decomposition(fx.a, fx.b, fx.c, fx.d);
  CHECK(f.holds);
  CHECK(std::abs(f.detail["trace_m"].get<double>() - kExpectedTrace) <= kFixtureTol);
  CHECK(f.detail["n_plus_p_residual"].get<double>() <= 1e-14);

  RngStream rng(11);
  for (int t = 0; t < 50; ++t) {
    const PDMatrix a = random_pd(3, rng, Field::kComplex);
    const PDMatrix b = random_pd(3, rng, Field::kComplex);
    const PDMatrix c = random_pd(3, rng, Field::kComplex);
    const PDMatrix d = random_pd(3, rng, Field::kComplex);
    const CheckReport r = check_s4_decomposition(a, b, c, d);
    CHECK(r.holds);
    CHECK(r.detail["margin_m_plus_p"].get<double>() >= -1e-9 * (1 + std::abs(r.detail["trace_m"].get<double>())));
    CHECK(r.detail["margin_m_plus_n"].get<double>() >= -1e-9 * (1 + std::abs(r.detail["trace_m"].get<double>())));
    CHECK(r.detail["n_plus_p_residual"].get<double>() <= kIdentityTol);
    CHECK(r.detail["trace_m"].get<double>() ==
          doctest::Approx(eval_Fp(CyclicFamily({a, b, c, d}))).epsilon(1e-10));
  }
}

TEST_CASE("shapiro_extension") {
  const CheckReport id = check_shapiro_extension(identity_family(3, 2));
  CHECK(id.holds);
  CHECK(id.detail["fp_extended"].get<double>() == doctest::Approx(5.0 * 2 / 2.0).epsilon(1e-14));

  const CheckReport s = check_shapiro_extension(scalar_family({1, 2, 3}));
  CHECK(s.holds);
  CHECK(s.detail["fp_extended"].get<double>() ==
        doctest::Approx(scalar_shapiro({1, 2, 3, 1, 2})).epsilon(1e-14));
  CHECK(scalar_shapiro({1, 2, 3, 1, 2}) == doctest::Approx(scalar_shapiro({1, 2, 3}) + 1.0).epsilon(1e-14));

  const CyclicFamily fx = counterexample_fixture().family();
  CHECK(std::abs(eval_Fp(fx.extended(2)) - (eval_Fp(fx) + 2.0)) <= 1e-6);
  CHECK(std::abs(eval_Fp(fx.extended(2)) - (kExpectedTrace + 2.0)) <= kFixtureTol);
}

TEST_CASE("bidirectional") {
  const CheckReport id = check_bidirectional(identity_family(5, 2));
  CHECK(id.holds);
  CHECK(lhs0(id) == doctest::Approx(10.0).epsilon(1e-14));

  const CyclicFamily fx = counterexample_fixture().family();
  const CheckReport f = check_bidirectional(fx);
  CHECK(f.holds);
  CHECK(f.rhs == doctest::Approx(8.0));
  CHECK(std::abs(f.detail["forward"].get<double>() - kExpectedTrace) <= kFixtureTol);
  CHECK(f.detail["reverse"].get<double>() == doctest::Approx(eval_Fp(fx.reversed())).epsilon(1e-14));

  RngStream rng(12);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> a(14);
    for (auto& v : a) v = std::exp(rng.uniform(-4.0, 4.0));
    std::vector<double> rev(a.rbegin(), a.rend());
    const CheckReport r = check_bidirectional(scalar_family(a));
    CHECK(r.holds);
    CHECK(lhs0(r) == doctest::Approx(scalar_shapiro(a) + scalar_shapiro(rev)).epsilon(1e-12));
  }
}

TEST_CASE("bidirectional_eig4") {
  const CheckReport id = check_bidirectional_eig4(eye_pd(3), eye_pd(3), eye_pd(3), eye_pd(3));
  CHECK(id.holds);
  for (const auto& v : id.lhs) CHECK(std::abs(v - 4.0) < kExact);

  const CheckReport s = check_bidirectional_eig4(scalar_pd(1), scalar_pd(2), scalar_pd(3), scalar_pd(4));
  CHECK(s.holds);
  CHECK(lhs0(s) == doctest::Approx(scalar_shapiro({1, 2, 3, 4}) + scalar_shapiro({4, 3, 2, 1})).epsilon(1e-12));

  const auto& fx = counterexample_fixture();
  const CheckReport f = check_bidirectional_eig4(fx.a, fx.b, fx.c, fx.d);
  CHECK(f.holds);
  CHECK(lhs0(f) >= 4.0);
}

TEST_CASE("upper_bound_2ab") {
  const CheckReport one = check_upper_bound_2ab(scalar_pd(1), scalar_pd(1), scalar_pd(1));
  CHECK(one.holds);
  CHECK(one.detail["trace_m"].get<double>() == doctest::Approx(1.0));
  CHECK(one.detail["trace_n"].get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(one.margin) < kExact);

  const CheckReport two = check_upper_bound_2ab(eye_pd(2), eye_pd(2), eye_pd(2));
  CHECK(two.holds);
  CHECK(two.detail["trace_m"].get<double>() == doctest::Approx(2.0));
  CHECK(two.rhs == doctest::Approx(2.5));

  RngStream rng(13);
  for (int t = 0; t < 50; ++t) {
    const CheckReport r = check_upper_bound_2ab(random_pd(3, rng, Field::kReal), random_pd(3, rng, Field::kReal),
                                                random_pd(3, rng, Field::kReal));
    CHECK(r.holds);
    CHECK(r.detail["two_m_plus_n_residual"].get<double>() <= kIdentityTol);
    CHECK(r.detail["margin_trace_n"].get<double>() >= -1e-9);
    CHECK(r.detail["wz_residual"].get<double>() <= kIdentityTol);
  }
}

TEST_CASE("wz certificate") {
  const Certificate c1 = build_wz_certificate(scalar_pd(1), scalar_pd(1), scalar_pd(1));
  CHECK(c1.valid);
  CHECK(c1.value("quotient") == doctest::Approx(1.0));
  CHECK(c1.value("ww_trace") == doctest::Approx(1.0));
  CHECK(std::abs(c1.block("W")(0, 0) - 1.0 / std::sqrt(3.0)) < kExact);
  CHECK(std::abs((c1.block("W") * c1.block("Z").adjoint())(0, 0) - 3.0) < kExact);
  CHECK(std::abs((c1.block("Z") * c1.block("Z").adjoint())(0, 0) - 9.0) < kExact);

  const Certificate c2 = build_wz_certificate(eye_pd(2), eye_pd(2), eye_pd(2));
  CHECK(c2.valid);
  CHECK(((c2.block("W") * c2.block("Z").adjoint()) - 3.0 * CMatrix::Identity(2, 2)).norm() < kExact);
  CHECK(std::abs((c2.block("Z") * c2.block("Z").adjoint()).trace() - 18.0) < kExact);
  CHECK(c2.value("quotient") == doctest::Approx(2.0));

  RngStream rng(14);
  for (int t = 0; t < 50; ++t) {
    const PDMatrix a = random_pd(3, rng, Field::kComplex);
    const PDMatrix b = random_pd(3, rng, Field::kComplex);
    const PDMatrix c = random_pd(3, rng, Field::kComplex);
    const Certificate cert = build_wz_certificate(a, b, c);
    CHECK(cert.valid);
    const CMatrix wz = cert.block("W") * cert.block("Z").adjoint();
    const CMatrix total = a.entries() + b.entries() + c.entries();
    CHECK((wz - total).norm() <= 1e-9 * (1.0 + total.norm()));
  }
}

TEST_CASE("square_cycle") {
  const CheckReport id = check_square_cycle(identity_family(4, 3));
  CHECK(id.holds);
  CHECK(std::abs(id.margin) < kExact);
  const CheckReport s = check_square_cycle(scalar_family({1, 2}));
  CHECK(s.holds);
  CHECK(s.detail["lhs_trace"].get<double>() == doctest::Approx(4.5));
  CHECK(s.detail["rhs_trace"].get<double>() == doctest::Approx(3.0));

  RngStream rng(15);
  for (int t = 0; t < 20; ++t) {
    const CheckReport r = check_square_cycle(random_family(5, 3, rng, Field::kComplex));
    CHECK(r.holds);
    CHECK(r.detail["wz_residual"].get<double>() <= 1e-9);
    CHECK(r.detail["zz_residual"].get<double>() <= 1e-9);
  }
}

TEST_CASE("every checker holds on all-identity inputs") {
  for (int n = 1; n <= 3; ++n) {
    const PDMatrix i = eye_pd(n);
    const CMatrix e = CMatrix::Identity(n, n);
    CHECK(check_trace_product(i.herm(), i.herm()).holds);
    CHECK(check_weighted_cs(e, e, i).holds);
    CHECK(check_cs_trace(e, e).holds);
    CHECK(check_eigineq1(i, i).holds);
    CHECK(check_nesbitt(i, i, i).holds);
    CHECK(check_s4_decomposition(i, i, i, i).holds);
    CHECK(check_bidirectional_eig4(i, i, i, i).holds);
    CHECK(check_upper_bound_2ab(i, i, i).holds);
    for (int p = 3; p <= 6; ++p) {
      const CyclicFamily f = identity_family(p, n);
      CHECK(check_harmonic_loewner(f).holds);
      CHECK(check_product_sum_eigs(f).holds);
      CHECK(check_nesbitt_k(f).holds);
      CHECK(check_shapiro_trace(f).holds);
      CHECK(check_shapiro_extension(f).holds);
      CHECK(check_bidirectional(f).holds);
      CHECK(check_square_cycle(f).holds);
    }
  }
}

TEST_CASE("counterexample fixture") {
  const CheckReport r = reproduce_counterexample();
  CHECK_FALSE(r.holds);
  REQUIRE(r.lhs.size() == 2);
  for (const auto& z : r.lhs) {
    CHECK(std::abs(z.real() - kExpectedRealPart) <= kFixtureTol);
    CHECK(std::abs(std::abs(z.imag()) - kExpectedImagPart) <= kFixtureTol);
  }
  CHECK(r.lhs[0].imag() == doctest::Approx(-r.lhs[1].imag()));
  CHECK(std::abs(r.detail["trace"].get<double>() - kExpectedTrace) <= kFixtureTol);
  CHECK(r.detail["trace_holds"].get<bool>());
  CHECK(r.detail["closed_form_discrepancy"].get<double>() <= 1e-12);
  CHECK(r.margin < 0.0);
}

}  // namespace
}  // namespace cyclicpd::inequalities
