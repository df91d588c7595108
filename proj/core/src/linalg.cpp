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

#include "stripe/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace stripe {

CMat hermitian_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

bool is_hermitian(const CMat& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).norm() <= rel_tol * a.norm();
}

HermitianSolver::HermitianSolver(const CMat& a) {
  if (a.rows() != a.cols()) throw UsageError("HermitianSolver: matrix is not square");
  llt_.compute(a);
  if (llt_.info() != Eigen::Success) throw NumericError("Hermitian factorization failed: matrix is not positive definite");
}

CMat HermitianSolver::solve(const CMat& b) const {
  if (b.rows() != llt_.rows()) throw UsageError("HermitianSolver: right-hand side has wrong row count");
  return llt_.solve(b);
}

CVec HermitianSolver::solve(const CVec& b) const {
  if (b.rows() != llt_.rows()) throw UsageError("HermitianSolver: right-hand side has wrong row count");
  return llt_.solve(b);
}

CMat HermitianSolver::inverse() const {
  return llt_.solve(CMat::Identity(llt_.rows(), llt_.rows()));
}

CMat hermitian_solve(const CMat& a, const CMat& b) { return HermitianSolver(a).solve(b); }

RVec hermitian_eigenvalues(const CMat& a) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(a), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

CMat psd_sqrt(const CMat& r) {
  if (r.rows() != r.cols()) throw UsageError("psd_sqrt: matrix is not square");
  if (r.size() == 0) return r;
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(r));
  if (es.info() != Eigen::Success) throw NumericError("psd_sqrt: eigendecomposition failed");
  RVec lambda = es.eigenvalues();
  const double lambda_max = std::max(lambda.maxCoeff(), 0.0);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < 0.0) {
      if (lambda(i) < -1e-10 * lambda_max) throw NumericError("psd_sqrt: matrix is not positive semi-definite");
      lambda(i) = 0.0;
    }
  }
  const CMat& u = es.eigenvectors();
  return u * lambda.cwiseSqrt().cast<cdouble>().asDiagonal() * u.adjoint();
}

CMat block_diagonal(std::span<const CMat> blocks) {
  Eigen::Index rows = 0, cols = 0;
  for (const auto& b : blocks) rows += b.rows(), cols += b.cols();
  CMat out = CMat::Zero(rows, cols);
  Eigen::Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

CMat block_inverse(const CMat& a, const CMat& b, const CMat& c, const CMat& d) {
  if (a.rows() != a.cols() || d.rows() != d.cols() || b.rows() != a.rows() || b.cols() != d.cols() ||
      c.rows() != d.rows() || c.cols() != a.cols())
    throw UsageError("block_inverse: inconsistent block dimensions");
  const CMat ainv = Eigen::PartialPivLU<CMat>(a).inverse();
  const CMat ainv_b = ainv * b;
  const CMat c_ainv = c * ainv;
  const CMat sinv = Eigen::PartialPivLU<CMat>(d - c * ainv_b).inverse();

  const Eigen::Index n = a.rows(), m = d.rows();
  CMat out(n + m, n + m);
  out.topLeftCorner(n, n) = ainv + ainv_b * sinv * c_ainv;
  out.topRightCorner(n, m) = -ainv_b * sinv;
  out.bottomLeftCorner(m, n) = -sinv * c_ainv;
  out.bottomRightCorner(m, m) = sinv;
  return out;
}

}  // namespace stripe
