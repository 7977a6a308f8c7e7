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

// Fisher information of the BTL log-likelihood in the raw (unnormalized)
// parameters, and the covariance estimates derived from it.
//
// For one record where w beat l, with s = g_w + g_l, the Hessian of
// log g_w - log s is
//
//   d2/dg_w2 = -1/g_w^2 + 1/s^2,  d2/dg_l2 = 1/s^2,  d2/dg_w dg_l = 1/s^2.
//
// Both information matrices are singular along g itself: the likelihood is
// invariant to rescaling.

#ifndef PAIRSHRINK_FISHER_H_
#define PAIRSHRINK_FISHER_H_

#include <Eigen/Core>

#include "pairshrink/covariance.h"
#include "pairshrink/dataset.h"
#include "pairshrink/mnl.h"

namespace pairshrink {

enum class InformationKind { kObserved, kExpected };

struct InformationMatrix {
  Eigen::MatrixXd matrix;  // per-comparison average
  InformationKind kind = InformationKind::kObserved;
  int num_comparisons = 0;
  // Point the information was evaluated at; may be empty.
  Eigen::VectorXd point;

  // N times the average: an estimate of the inverse covariance.
  Eigen::MatrixXd Total() const { return num_comparisons * matrix; }
};

// -(1/N) * Hessian of LogLikelihood at `model`. Throws DataError on an empty
// dataset or a dimension mismatch.
InformationMatrix ObservedInformation(const QualityVector& model, const Dataset& data);

// Same matchups, outcomes replaced by their expectation under `model`: each
// matchup's winner-i and winner-j curvature weighted by p_ij and p_ji.
InformationMatrix ExpectedInformation(const QualityVector& model, const Dataset& data);

enum class InverseMethod {
  // Eigenvalues at or below 1e-10 of the largest are dropped.
  kPseudoInverse,
  // Adds 1e-8 * trace / n to the diagonal before the pseudo-inverse.
  kRidge,
};

// Sigma = inverse(info) / N, mapped onto the simplex by the Jacobian of
// normalization J = I - g 1^T when `info.point` is set:
// Sigma = J pinv(info) J^T / N. The pseudo-inverse alone is orthogonal to g,
// while the normalized estimate varies in {v : sum(v) = 0}; the map makes
// the rows of Sigma sum to zero like a bootstrap covariance. Throws
// NumericalError "no curvature" for an all-zero matrix.
CovarianceEstimate CovarianceFromInformation(
    const InformationMatrix& info, InverseMethod method = InverseMethod::kPseudoInverse);

// R = (I + A S)^-1, the weight on the prior target when S estimates the
// inverse covariance. Solved as a linear system; if I + A S is singular, S
// gets a ridge of 1e-8 * trace(S) / n once before giving up with
// NumericalError.
Eigen::MatrixXd ImplicitShrinkMatrix(const Eigen::MatrixXd& inverse_covariance,
                                     const Eigen::MatrixXd& prior_covariance);

}  // namespace pairshrink

#endif  // PAIRSHRINK_FISHER_H_
