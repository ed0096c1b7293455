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

#include "cyclicpd/pdcore/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/functions.hpp"

namespace cyclicpd {

namespace {

constexpr double kHermResidualCap = 1e-10;

bool spectral_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double residual_of(const CMatrix& m, const CMatrix& vectors, std::span<const Complex> values) {
  const double scale = std::max(m.norm(), std::numeric_limits<double>::min());
  double worst = 0.0;
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    const double vnorm = vectors.col(j).norm();
    if (vnorm == 0.0) continue;
    const double r = (m * vectors.col(j) - values[static_cast<std::size_t>(j)] * vectors.col(j)).norm();
    worst = std::max(worst, r / (vnorm * scale));
  }
  return worst;
}

[[noreturn]] void convergence_failure(const char* solver, double residual) {
  std::ostringstream os;
  os.precision(3);
  os << solver << " did not converge (residual " << residual << ")";
  throw Error(ErrorCode::kConvergenceFailure, os.str());
}

}  // namespace

double Spectrum::min_real() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& v : values) lo = std::min(lo, v.real());
  return lo;
}

double Spectrum::max_real() const {
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& v : values) hi = std::max(hi, v.real());
  return hi;
}

double Spectrum::max_abs_imag() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v.imag()));
  return m;
}

double Spectrum::max_abs() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

Complex Spectrum::sum() const {
  return std::accumulate(values.begin(), values.end(), Complex(0.0, 0.0));
}

std::vector<double> Spectrum::real_parts() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.real());
  std::sort(out.begin(), out.end());
  return out;
}

HermDecomposition decompose_herm(const HermMatrix& h) {
  HermDecomposition out;
  if (h.is_real()) {
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(h.entries().real());
    if (solver.info() != Eigen::Success) convergence_failure("symmetric eigensolver", NAN);
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.entries());
    if (solver.info() != Eigen::Success) convergence_failure("Hermitian eigensolver", NAN);
    out.values = solver.eigenvalues();
    out.vectors = solver.eigenvectors();
  }
  return out;
}

Spectrum eig_herm(const HermMatrix& h) {
  const HermDecomposition d = decompose_herm(h);
  Spectrum s;
  s.values.reserve(static_cast<std::size_t>(d.values.size()));
  for (Eigen::Index i = 0; i < d.values.size(); ++i) s.values.emplace_back(d.values(i), 0.0);
  s.residual_bound = residual_of(h.entries(), d.vectors, s.values);
  if (!(s.residual_bound <= kHermResidualCap)) {
    convergence_failure("Hermitian eigensolver", s.residual_bound);
  }
  return s;
}

Spectrum eig_general(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotSquare, "eig_general needs a square matrix");
  Eigen::ComplexEigenSolver<CMatrix> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) convergence_failure("complex QR", NAN);
  Spectrum s;
  const auto& ev = solver.eigenvalues();
  s.values.assign(ev.data(), ev.data() + ev.size());
  s.residual_bound = residual_of(m, solver.eigenvectors(), s.values);
  std::sort(s.values.begin(), s.values.end(), spectral_less);
  return s;
}

std::array<Complex, 2> eig_2x2_closed_form(const CMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorCode::kShapeMismatch, "closed form needs a 2x2 matrix");
  }
  const Complex half_tr = 0.5 * (m(0, 0) + m(1, 1));
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Complex root = std::sqrt(half_tr * half_tr - det);
  std::array<Complex, 2> out{half_tr - root, half_tr + root};
  std::sort(out.begin(), out.end(), spectral_less);
  return out;
}

Spectrum eig_pd_product(const PDMatrix& p, const PDMatrix& q) {
  require_same_dim(p.dim(), q.dim(), "eig_pd_product");
  const PDMatrix root = sqrt_pd(q);
  const CMatrix congruence = root.entries() * p.entries() * root.entries();
  return eig_herm(HermMatrix::symmetrize(congruence));
}

}  // namespace cyclicpd
