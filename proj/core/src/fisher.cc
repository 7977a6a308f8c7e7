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

#include "pairshrink/fisher.h"

#include <string>

#include <Eigen/LU>

#include "pairshrink/errors.h"
#include "pairshrink/graph.h"
#include "pairshrink/linalg.h"

namespace pairshrink {
namespace {

void CheckInputs(const QualityVector& model, const Dataset& data) {
  if (model.size() != data.num_items()) throw DataError("model/data dimension mismatch");
  if (data.empty()) throw DataError("no information: dataset is empty");
}

}  // namespace

InformationMatrix ObservedInformation(const QualityVector& model, const Dataset& data) {
  CheckInputs(model, data);
  const int n = model.size();
  Eigen::MatrixXd info = Eigen::MatrixXd::Zero(n, n);
  for (const Comparison& c : data.records()) {
    const double gw = model[c.winner];
    const double s2 = (gw + model[c.loser]) * (gw + model[c.loser]);
    info(c.winner, c.winner) += 1.0 / (gw * gw) - 1.0 / s2;
    info(c.loser, c.loser) -= 1.0 / s2;
    info(c.winner, c.loser) -= 1.0 / s2;
    info(c.loser, c.winner) -= 1.0 / s2;
  }
  info /= data.size();
  return {std::move(info), InformationKind::kObserved, data.size(), model.values()};
}

InformationMatrix ExpectedInformation(const QualityVector& model, const Dataset& data) {
  CheckInputs(model, data);
  const int n = model.size();
  const ComparisonGraph graph = BuildGraph(data);
  Eigen::MatrixXd info = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int count = graph.matchups(i, j);
      if (count == 0) continue;
      const double gi = model[i], gj = model[j];
      const double s2 = (gi + gj) * (gi + gj);
      // p_ij * (1/gi^2 - 1/s^2) + p_ji * (-1/s^2) = gj / (gi * s^2), etc.
      info(i, i) += count * gj / (gi * s2);
      info(j, j) += count * gi / (gj * s2);
      info(i, j) -= count / s2;
      info(j, i) -= count / s2;
    }
  }
  info /= data.size();
  return {std::move(info), InformationKind::kExpected, data.size(), model.values()};
}

CovarianceEstimate CovarianceFromInformation(const InformationMatrix& info,
                                             InverseMethod method) {
  if (info.num_comparisons < 1) throw DataError("information averages over no comparisons");
  if (info.matrix.cwiseAbs().maxCoeff() == 0.0) throw NumericalError("no curvature");
  const Eigen::Index n = info.matrix.rows();
  const bool has_point = info.point.size() == n;
  // In log coordinates (D = diag(g)) the curvature is on the scale of
  // counts, so the relative cutoff does not wipe out well-measured items
  // when some qualities sit near zero. D pinv(D I D) D is still a
  // generalized inverse of I.
  Eigen::VectorXd scale = has_point ? info.point : Eigen::VectorXd::Ones(n);
  Eigen::MatrixXd m = Symmetrized(scale.asDiagonal() * info.matrix * scale.asDiagonal());
  if (method == InverseMethod::kRidge) {
    m.diagonal().array() += 1e-8 * m.trace() / n;
  }
  Eigen::MatrixXd sigma = scale.asDiagonal() *
                          SymmetricPseudoInverse(m, kPinvRelativeCutoff, /*positive_part=*/true) *
                          scale.asDiagonal() / info.num_comparisons;
  if (has_point) {
    const Eigen::MatrixXd jacobian =
        Eigen::MatrixXd::Identity(n, n) - info.point * Eigen::RowVectorXd::Ones(n);
    sigma = jacobian * sigma * jacobian.transpose();
  }
  CovarianceEstimate estimate;
  estimate.matrix = Symmetrized(sigma);
  estimate.scheme = info.kind == InformationKind::kObserved ? CovarianceScheme::kFisherObserved
                                                            : CovarianceScheme::kFisherExpected;
  return estimate;
}

Eigen::MatrixXd ImplicitShrinkMatrix(const Eigen::MatrixXd& inverse_covariance,
                                     const Eigen::MatrixXd& prior_covariance) {
  const Eigen::Index n = inverse_covariance.rows();
  if (inverse_covariance.cols() != n || prior_covariance.rows() != n ||
      prior_covariance.cols() != n) {
    throw DataError("implicit shrinkage: dimension mismatch");
  }
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(identity + prior_covariance * inverse_covariance);
  if (!lu.isInvertible()) {
    Eigen::MatrixXd ridged = inverse_covariance;
    ridged.diagonal().array() += 1e-8 * inverse_covariance.trace() / n;
    lu.compute(identity + prior_covariance * ridged);
    if (!lu.isInvertible()) throw NumericalError("I + A S is singular");
  }
  return lu.solve(identity);
}

}  // namespace pairshrink
