// Copyright 2026 The Pairshrink Authors.
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

#include "pairshrink/linalg.h"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace pairshrink {

Eigen::MatrixXd SymmetricPseudoInverse(const Eigen::MatrixXd& m, double relative_cutoff,
                                       bool positive_part) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Symmetrized(m));
  const Eigen::VectorXd& values = eig.eigenvalues();
  const double largest = values.cwiseAbs().maxCoeff();
  const double cutoff = relative_cutoff * largest;
  Eigen::VectorXd inverted = Eigen::VectorXd::Zero(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const bool keep = positive_part ? values[i] > cutoff : std::abs(values[i]) > cutoff;
    if (keep) inverted[i] = 1.0 / values[i];
  }
  const Eigen::MatrixXd& v = eig.eigenvectors();
  return Symmetrized(v * inverted.asDiagonal() * v.transpose());
}

Eigen::MatrixXd PseudoInverse(const Eigen::MatrixXd& m, double relative_cutoff) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = s.size() > 0 ? relative_cutoff * s[0] : 0.0;
  Eigen::VectorXd inverted = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > cutoff) inverted[i] = 1.0 / s[i];
  }
  return svd.matrixV() * inverted.asDiagonal() * svd.matrixU().transpose();
}

double MinEigenvalueOrthogonalTo(const Eigen::MatrixXd& m, const Eigen::VectorXd& direction) {
  const Eigen::Index n = m.rows();
  if (n < 2) return 0.0;
  // Orthonormal basis whose first column spans `direction`.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(direction);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd basis = q.rightCols(n - 1);
  const Eigen::MatrixXd reduced = basis.transpose() * Symmetrized(m) * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(reduced, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

bool IsSymmetric(const Eigen::MatrixXd& m, double tol) {
  return m.rows() == m.cols() && (m - m.transpose()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace pairshrink
