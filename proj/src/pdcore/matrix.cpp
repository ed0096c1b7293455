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

#include "cyclicpd/pdcore/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "cyclicpd/pdcore/errors.hpp"
#include "cyclicpd/pdcore/spectrum.hpp"

namespace cyclicpd {

Tolerance Tolerance::make(double rel, double abs) {
  if (!(rel > 0.0) || !(abs > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerances must be positive");
  }
  return Tolerance{rel, abs};
}

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimensions " << a << " and " << b << " differ";
    throw Error(ErrorCode::kDimensionMismatch, os.str());
  }
}

namespace {

bool all_imag_zero(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j).imag() != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

HermMatrix::HermMatrix(CMatrix entries)
    : entries_(std::move(entries)), real_(all_imag_zero(entries_)) {}

HermMatrix HermMatrix::from_entries(const CMatrix& entries, const Tolerance& tol) {
  if (entries.rows() != entries.cols()) {
    std::ostringstream os;
    os << "matrix is " << entries.rows() << "x" << entries.cols();
    throw Error(ErrorCode::kNotSquare, os.str());
  }
  if (entries.rows() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimension must be at least 1");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= tol.rel * scale)) {
    std::ostringstream os;
    os.precision(6);
    os << "asymmetry " << asym << " exceeds " << tol.rel * scale;
    throw Error(ErrorCode::kNotHermitian, os.str());
  }
  return symmetrize(entries);
}

HermMatrix HermMatrix::from_entries(const RMatrix& entries, const Tolerance& tol) {
  return from_entries(CMatrix(entries.cast<Complex>()), tol);
}

HermMatrix HermMatrix::symmetrize(const CMatrix& entries) {
  CMatrix h = 0.5 * (entries + entries.adjoint());
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = Complex(h(i, i).real(), 0.0);
  return HermMatrix(std::move(h));
}

HermMatrix HermMatrix::identity(int n) {
  return HermMatrix(CMatrix::Identity(n, n));
}

PDMatrix::PDMatrix(HermMatrix base, double min_eig, double max_eig)
    : base_(std::move(base)), min_eig_(min_eig), max_eig_(max_eig) {}

PDMatrix PDMatrix::identity(int n) { return PDMatrix(HermMatrix::identity(n), 1.0, 1.0); }

PDMatrix make_pd(const HermMatrix& h, const Tolerance& tol) {
  const Spectrum spec = eig_herm(h);
  const double lo = spec.min_real();
  if (!(lo > tol.abs)) throw NotPositiveDefiniteError(lo);
  return PDMatrix(h, lo, spec.max_real());
}

namespace detail {
PDMatrix assume_pd(HermMatrix h, double min_eig, double max_eig) {
  return PDMatrix(std::move(h), min_eig, max_eig);
}
}  // namespace detail

PDMatrix make_pd(const CMatrix& entries, const Tolerance& tol) {
  return make_pd(HermMatrix::from_entries(entries, tol), tol);
}

PDMatrix make_pd(const RMatrix& entries, const Tolerance& tol) {
  return make_pd(HermMatrix::from_entries(entries, tol), tol);
}

CyclicFamily::CyclicFamily(std::vector<PDMatrix> members) : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "a cyclic family needs at least one member");
  }
  for (const auto& m : members_) require_same_dim(members_.front().dim(), m.dim(), "CyclicFamily");
}

CyclicFamily CyclicFamily::identity(int p, int n) {
  return CyclicFamily(std::vector<PDMatrix>(static_cast<std::size_t>(p), PDMatrix::identity(n)));
}

const PDMatrix& CyclicFamily::at(long i) const {
  const long p = static_cast<long>(members_.size());
  long k = i % p;
  if (k < 0) k += p;
  return members_[static_cast<std::size_t>(k)];
}

bool CyclicFamily::is_real() const {
  return std::all_of(members_.begin(), members_.end(),
                     [](const PDMatrix& m) { return m.is_real(); });
}

CyclicFamily CyclicFamily::reversed() const {
  return CyclicFamily(std::vector<PDMatrix>(members_.rbegin(), members_.rend()));
}

CyclicFamily CyclicFamily::extended(int count) const {
  std::vector<PDMatrix> out = members_;
  for (int i = 0; i < count; ++i) out.push_back(at(i));
  return CyclicFamily(std::move(out));
}

CMatrix sum(const CyclicFamily& family) {
  CMatrix s = CMatrix::Zero(family.dim(), family.dim());
  for (const auto& m : family.members()) s += m.entries();
  return s;
}

}  // namespace cyclicpd
