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

// Empirical Bayes (James-Stein) shrinkage of the MLE toward a prior target.
//
// With estimator covariance Sigma and prior N(u, A) on the true parameters,
// the shrunk estimate is
//
//   g_shr = (I - W) g_mle + W u,   W = Sigma (Sigma + A)^-1.
//
// When only an inverse-covariance estimate S is available, W = (I + A S)^-1
// gives the same weight without inverting S.

#ifndef PAIRSHRINK_SHRINKAGE_H_
#define PAIRSHRINK_SHRINKAGE_H_

#include <string_view>

#include <Eigen/Core>

#include "pairshrink/covariance.h"
#include "pairshrink/mnl.h"
#include "pairshrink/partition.h"

namespace pairshrink {

struct PriorSpec {
  Eigen::VectorXd target;      // u
  Eigen::MatrixXd covariance;  // A
};

enum class PriorCovarianceForm {
  // Covariance of Dirichlet(n * g): A_ii = g_i (1 - g_i) / (n + 1),
  // A_ij = -g_i g_j / (n + 1). PSD with zero row sums.
  kDirichlet,
  // Variant with diagonal g_i (1 - g_i) / (n (n + 1)) and positive
  // off-diagonal g_i g_j / (n + 1); kept for comparison only.
  kPrintedVariant,
};

Eigen::MatrixXd DirichletPriorCovariance(const QualityVector& model,
                                         PriorCovarianceForm form = PriorCovarianceForm::kDirichlet);

// Constant 1/n. Throws DataError for n < 2.
Eigen::VectorXd UniformTarget(int n);

// Each item's target is the mean fitted quality of its group.
Eigen::VectorXd RaschTarget(const QualityVector& model, const RaschStructure& structure);

// W = Sigma (Sigma + A)^-1, falling back to the pseudo-inverse of
// Sigma + A when it is singular.
Eigen::MatrixXd ShrinkageWeight(const Eigen::MatrixXd& sigma, const Eigen::MatrixXd& prior_covariance);

// (I - W) x + W u with no projection; for Gaussian-model checks.
Eigen::VectorXd ShrinkLinear(const Eigen::VectorXd& estimate, const Eigen::MatrixXd& weight,
                             const Eigen::VectorXd& target);

// Clamps entries below 1e-12 up to 1e-12 and renormalizes.
QualityVector ProjectToSimplex(const Eigen::VectorXd& v);

// James-Stein estimate from an explicit covariance (an inverse estimate is
// pseudo-inverted first).
QualityVector JamesStein(const QualityVector& mle, const CovarianceEstimate& sigma,
                         const PriorSpec& prior);

// James-Stein estimate from an inverse-covariance estimate S via
// W = (I + A S)^-1.
QualityVector JamesSteinImplicit(const QualityVector& mle,
                                 const Eigen::MatrixXd& inverse_covariance,
                                 const PriorSpec& prior);

}  // namespace pairshrink

#endif  // PAIRSHRINK_SHRINKAGE_H_
