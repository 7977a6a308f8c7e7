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

#include "pairshrink/shrinkage.h"

#include <Eigen/LU>

#include "pairshrink/errors.h"
#include "pairshrink/fisher.h"
#include "pairshrink/linalg.h"

namespace pairshrink {
namespace {

constexpr double kClampFloor = 1e-12;

void CheckPrior(const PriorSpec& prior, Eigen::Index n) {
  if (prior.target.size() != n || prior.covariance.rows() != n ||
      prior.covariance.cols() != n) {
    throw DataError("prior dimension does not match the model");
  }
}

}  // namespace

Eigen::MatrixXd DirichletPriorCovariance(const QualityVector& model, PriorCovarianceForm form) {
  const Eigen::VectorXd& g = model.values();
  const double n = static_cast<double>(g.size());
  Eigen::MatrixXd a = g * g.transpose() / (n + 1.0);
  const Eigen::VectorXd variance = g.array() * (1.0 - g.array());
  if (form == PriorCovarianceForm::kDirichlet) {
    a = -a;
    a.diagonal() = variance / (n + 1.0);
  } else {
    a.diagonal() = variance / (n * (n + 1.0));
  }
  return a;
}

Eigen::VectorXd UniformTarget(int n) {
  if (n < 2) throw DataError("uniform target needs n >= 2");
  return Eigen::VectorXd::Constant(n, 1.0 / n);
}

Eigen::VectorXd RaschTarget(const QualityVector& model, const RaschStructure& structure) {
  if (structure.num_items() != model.size()) {
    throw DataError("rasch partition does not match the model");
  }
  double sums[2] = {0.0, 0.0};
  for (int i = 0; i < model.size(); ++i) sums[structure.group_of(i)] += model[i];
  Eigen::VectorXd u(model.size());
  for (int i = 0; i < model.size(); ++i) {
    const int g = structure.group_of(i);
    u[i] = sums[g] / structure.group_size(g);
  }
  return u;
}

Eigen::MatrixXd ShrinkageWeight(const Eigen::MatrixXd& sigma,
                                const Eigen::MatrixXd& prior_covariance) {
  const Eigen::MatrixXd total = Symmetrized(sigma + prior_covariance);
  // W^T = (Sigma + A)^-1 Sigma for symmetric Sigma and A.
  Eigen::FullPivLU<Eigen::MatrixXd> lu(total);
  lu.setThreshold(kPinvRelativeCutoff);
  if (lu.isInvertible()) {
    return lu.solve(sigma).transpose();
  }
  return sigma * SymmetricPseudoInverse(total);
}

Eigen::VectorXd ShrinkLinear(const Eigen::VectorXd& estimate, const Eigen::MatrixXd& weight,
                             const Eigen::VectorXd& target) {
  return estimate + weight * (target - estimate);
}

QualityVector ProjectToSimplex(const Eigen::VectorXd& v) {
  if (!v.allFinite()) throw NumericalError("shrunk estimate is not finite");
  return QualityVector::Normalized(v.cwiseMax(kClampFloor));
}

QualityVector JamesStein(const QualityVector& mle, const CovarianceEstimate& sigma,
                         const PriorSpec& prior) {
  const Eigen::Index n = mle.size();
  CheckPrior(prior, n);
  if (sigma.matrix.rows() != n || sigma.matrix.cols() != n) {
    throw DataError("covariance dimension does not match the model");
  }
  const Eigen::MatrixXd explicit_sigma =
      sigma.is_inverse ? SymmetricPseudoInverse(sigma.matrix) : sigma.matrix;
  const Eigen::MatrixXd weight = ShrinkageWeight(explicit_sigma, prior.covariance);
  return ProjectToSimplex(ShrinkLinear(mle.values(), weight, prior.target));
}

QualityVector JamesSteinImplicit(const QualityVector& mle,
                                 const Eigen::MatrixXd& inverse_covariance,
                                 const PriorSpec& prior) {
  CheckPrior(prior, mle.size());
  const Eigen::MatrixXd weight = ImplicitShrinkMatrix(inverse_covariance, prior.covariance);
  return ProjectToSimplex(ShrinkLinear(mle.values(), weight, prior.target));
}

}  // namespace pairshrink
