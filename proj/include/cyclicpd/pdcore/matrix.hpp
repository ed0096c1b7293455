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

#ifndef CYCLICPD_PDCORE_MATRIX_HPP_
#define CYCLICPD_PDCORE_MATRIX_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cyclicpd/pdcore/tolerance.hpp"

namespace cyclicpd {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

enum class Field { kReal, kComplex };

// A square matrix equal to its own conjugate transpose. Entries are stored
// complex; real-symmetric matrices are detected and take the real fast path
// in the eigensolvers.
class HermMatrix {
 public:
  // Validates squareness and Hermitian symmetry (asymmetry must not exceed
  // tol.rel relative to the largest entry), then stores (H + H*) / 2.
  static HermMatrix from_entries(const CMatrix& entries, const Tolerance& tol = {});
  static HermMatrix from_entries(const RMatrix& entries, const Tolerance& tol = {});

  // Symmetrizes without the asymmetry check. Used for quantities that are
  // Hermitian by construction but carry round-off (sums, congruences).
  static HermMatrix symmetrize(const CMatrix& entries);

  static HermMatrix identity(int n);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  bool is_real() const { return real_; }
  Field field() const { return real_ ? Field::kReal : Field::kComplex; }
  double norm() const { return entries_.norm(); }
  double trace() const { return entries_.trace().real(); }

 private:
  explicit HermMatrix(CMatrix entries);

  CMatrix entries_;
  bool real_ = true;
};

class PDMatrix;
PDMatrix make_pd(const HermMatrix& h, const Tolerance& tol = {});

namespace detail {
// For results that are PD by construction with known extreme eigenvalues
// (square roots, inverses). Skips the eigensolver.
PDMatrix assume_pd(HermMatrix h, double min_eig, double max_eig);
}  // namespace detail

// Hermitian positive definite matrix with its extreme eigenvalues cached at
// construction. Only make_pd creates these.
class PDMatrix {
 public:
  const HermMatrix& herm() const { return base_; }
  const CMatrix& entries() const { return base_.entries(); }
  int dim() const { return base_.dim(); }
  bool is_real() const { return base_.is_real(); }
  double norm() const { return base_.norm(); }
  double trace() const { return base_.trace(); }
  double min_eig() const { return min_eig_; }
  double max_eig() const { return max_eig_; }
  double condition() const { return max_eig_ / min_eig_; }

  static PDMatrix identity(int n);

 private:
  friend PDMatrix make_pd(const HermMatrix& h, const Tolerance& tol);
  friend PDMatrix detail::assume_pd(HermMatrix h, double min_eig, double max_eig);
  PDMatrix(HermMatrix base, double min_eig, double max_eig);

  HermMatrix base_;
  double min_eig_;
  double max_eig_;
};

// Throws NotSquare, NotHermitian or NotPositiveDefinite (min eig <= tol.abs).
PDMatrix make_pd(const CMatrix& entries, const Tolerance& tol = {});
PDMatrix make_pd(const RMatrix& entries, const Tolerance& tol = {});

// Ordered tuple (A_0, ..., A_{p-1}) of equal-dimension PD matrices with
// cyclic indexing: at(p) == at(0), at(-1) == at(p - 1).
class CyclicFamily {
 public:
  explicit CyclicFamily(std::vector<PDMatrix> members);

  static CyclicFamily identity(int p, int n);

  int p() const { return static_cast<int>(members_.size()); }
  int dim() const { return members_.front().dim(); }
  const PDMatrix& at(long i) const;
  const PDMatrix& operator[](long i) const { return at(i); }
  std::span<const PDMatrix> members() const { return members_; }
  bool is_real() const;

  // (A_{p-1}, ..., A_0).
  CyclicFamily reversed() const;
  // Appends the leading `count` members cyclically: (A_0..A_{p-1}, A_0..).
  CyclicFamily extended(int count) const;

 private:
  std::vector<PDMatrix> members_;
};

CMatrix sum(const CyclicFamily& family);

void require_same_dim(int a, int b, const char* what);

}  // namespace cyclicpd

#endif  // CYCLICPD_PDCORE_MATRIX_HPP_
