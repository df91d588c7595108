// Copyright 2026 The stripe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense Hermitian helpers shared by the estimators and receivers.

#pragma once

#include <span>

#include <Eigen/Cholesky>

#include "stripe/types.hpp"

namespace stripe {

// (A + A^H) / 2.
CMat hermitian_part(const CMat& a);

// ||A - A^H||_F <= rel_tol * ||A||_F.
bool is_hermitian(const CMat& a, double rel_tol = 1e-12);

// Cholesky factor of a Hermitian positive definite matrix. Only the lower
// triangle of the input is read. Throws NumericError if A is not PD.
class HermitianSolver {
 public:
  explicit HermitianSolver(const CMat& a);

  CMat solve(const CMat& b) const;
  CVec solve(const CVec& b) const;
  // A^{-1}, for the rare callers that really need the matrix.
  CMat inverse() const;
  Eigen::Index size() const { return llt_.rows(); }

 private:
  Eigen::LLT<CMat> llt_;
};

CMat hermitian_solve(const CMat& a, const CMat& b);

// Eigenvalues of the Hermitian part, ascending.
RVec hermitian_eigenvalues(const CMat& a);

// Hermitian square root R^{1/2} of a PSD matrix. Eigenvalues in
// [-1e-10 * lambda_max, 0) are clamped to zero; anything more negative
// throws NumericError.
CMat psd_sqrt(const CMat& r);

// diag(blocks[0], blocks[1], ...).
CMat block_diagonal(std::span<const CMat> blocks);

// Inverse of [[A, B], [C, D]] assembled from the Schur complement
// S = D - C A^{-1} B:
//   [[A^{-1} + A^{-1} B S^{-1} C A^{-1}, -A^{-1} B S^{-1}],
//    [-S^{-1} C A^{-1},                   S^{-1}]].
// A and S must be invertible (general LU solves are used).
CMat block_inverse(const CMat& a, const CMat& b, const CMat& c, const CMat& d);

}  // namespace stripe
