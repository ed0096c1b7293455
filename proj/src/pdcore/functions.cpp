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

#include "cyclicpd/pdcore/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/spectrum.hpp"

namespace cyclicpd {

namespace {

PDMatrix spectral_power(const PDMatrix& a, double exponent) {
  const HermDecomposition d = decompose_herm(a.herm());
  Eigen::VectorXd scaled(d.values.size());
  for (Eigen::Index i = 0; i < d.values.size(); ++i) {
    const double lambda = std::max(d.values(i), std::numeric_limits<double>::min());
    scaled(i) = std::pow(lambda, exponent);
  }
  const CMatrix out = d.vectors * scaled.cast<Complex>().asDiagonal() * d.vectors.adjoint();
  const double lo = scaled.minCoeff();
  const double hi = scaled.maxCoeff();
  return detail::assume_pd(HermMatrix::symmetrize(out), lo, hi);
}

}  // namespace

PDMatrix sqrt_pd(const PDMatrix& a) { return spectral_power(a, 0.5); }

PDMatrix inv_sqrt_pd(const PDMatrix& a) { return spectral_power(a, -0.5); }

PDMatrix inverse_pd(const PDMatrix& a) {
  const int n = a.dim();
  const CMatrix eye = CMatrix::Identity(n, n);
  Eigen::LLT<CMatrix> llt(a.entries());
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kIllConditioned, "Cholesky factorization failed");
  }
  CMatrix x = llt.solve(eye);
  x += llt.solve(eye - a.entries() * x);
  const HermMatrix sym = HermMatrix::symmetrize(x);
  const double residual = (a.entries() * sym.entries() - eye).norm();
  const double bound = 1e-10 * std::max(1.0, a.condition());
  if (!(residual <= bound)) {
    std::ostringstream os;
    os.precision(3);
    os << "inverse residual " << residual << " exceeds " << bound;
    throw Error(ErrorCode::kIllConditioned, os.str());
  }
  return detail::assume_pd(sym, 1.0 / a.max_eig(), 1.0 / a.min_eig());
}

namespace {
Eigen::LLT<CMatrix> factor(const CMatrix& s) {
  Eigen::LLT<CMatrix> llt(s);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kIllConditioned, "Cholesky factorization failed");
  }
  return llt;
}
}  // namespace

CMatrix right_divide(const CMatrix& x, const CMatrix& s) {
  return factor(s).solve(x.adjoint()).adjoint();
}

CMatrix left_divide(const CMatrix& s, const CMatrix& x) { return factor(s).solve(x); }

Complex trace_right_divide(const CMatrix& x, const CMatrix& s) {
  return factor(s).solve(x).trace();
}

LoewnerResult loewner_geq(const HermMatrix& a, const HermMatrix& b, const Tolerance& tol) {
  require_same_dim(a.dim(), b.dim(), "loewner_geq");
  const Spectrum s = eig_herm(HermMatrix::symmetrize(a.entries() - b.entries()));
  LoewnerResult r;
  r.margin = s.min_real();
  r.slack = tol.slack(a.norm() + b.norm());
  r.holds = r.margin >= -r.slack;
  return r;
}

}  // namespace cyclicpd
