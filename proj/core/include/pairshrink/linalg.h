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

#ifndef PAIRSHRINK_LINALG_H_
#define PAIRSHRINK_LINALG_H_

#include <Eigen/Core>

namespace pairshrink {

// Relative cutoff shared by every pseudo-inverse in the library.
inline constexpr double kPinvRelativeCutoff = 1e-10;

inline Eigen::MatrixXd Symmetrized(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

// Moore-Penrose pseudo-inverse of a symmetric matrix via its eigen
// decomposition; eigenvalues with |lambda| <= cutoff * max|lambda| are
// dropped. With `positive_part`, every eigenvalue <= cutoff * max|lambda|
// (including negative ones) is dropped, so the result is PSD.
Eigen::MatrixXd SymmetricPseudoInverse(const Eigen::MatrixXd& m,
                                       double relative_cutoff = kPinvRelativeCutoff,
                                       bool positive_part = false);

// General (non-symmetric) pseudo-inverse via SVD.
Eigen::MatrixXd PseudoInverse(const Eigen::MatrixXd& m,
                              double relative_cutoff = kPinvRelativeCutoff);

// Smallest eigenvalue of the symmetric `m` restricted to the orthogonal
// complement of `direction` (the null/scale direction).
double MinEigenvalueOrthogonalTo(const Eigen::MatrixXd& m, const Eigen::VectorXd& direction);

bool IsSymmetric(const Eigen::MatrixXd& m, double tol);

}  // namespace pairshrink

#endif  // PAIRSHRINK_LINALG_H_
