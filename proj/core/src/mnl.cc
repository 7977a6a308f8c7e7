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

#include "pairshrink/mnl.h"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "pairshrink/errors.h"

namespace pairshrink {
namespace {

// Floor for iterates; keeps 1/g finite downstream.
constexpr double kMinQuality = 1e-300;

}  // namespace

QualityVector::QualityVector(Eigen::VectorXd gamma) : gamma_(std::move(gamma)) {
  if (gamma_.size() < 1) throw DataError("empty quality vector");
  for (Eigen::Index i = 0; i < gamma_.size(); ++i) {
    if (!(gamma_[i] > 0.0) || !std::isfinite(gamma_[i])) {
      throw DataError("quality entry " + std::to_string(i) + " is not positive");
    }
  }
  if (std::abs(gamma_.sum() - 1.0) > kSumTolerance) {
    throw DataError("quality vector does not sum to 1");
  }
}

QualityVector QualityVector::Normalized(Eigen::VectorXd weights) {
  const double total = weights.sum();
  if (!(total > 0.0)) throw DataError("cannot normalize non-positive weights");
  weights /= total;
  return QualityVector(std::move(weights));
}

QualityVector QualityVector::Uniform(int n) {
  return QualityVector(Eigen::VectorXd::Constant(n, 1.0 / n));
}

void FitConfig::Validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw DataError("epsilon must be >= 0");
  if (!(tol > 0.0)) throw DataError("tol must be > 0");
  if (max_iter < 1) throw DataError("max_iter must be >= 1");
}

double ChoiceProb(const QualityVector& model, int i, int j) {
  if (i == j) throw DataError("choice probability needs two distinct items");
  return model[i] / (model[i] + model[j]);
}

double LogLikelihood(const QualityVector& model, const Dataset& data) {
  if (model.size() != data.num_items()) throw DataError("model/data dimension mismatch");
  double total = 0.0;
  for (const Comparison& c : data.records()) {
    total += std::log(model[c.winner]) - std::log(model[c.winner] + model[c.loser]);
  }
  return total;
}

double PenalizedLogLikelihood(const QualityVector& model, const Dataset& data,
                              double epsilon) {
  const Eigen::VectorXd& g = model.values();
  const double prior = g.array().log().sum() - g.size() * std::log(g.sum());
  return LogLikelihood(model, data) + epsilon * prior;
}

Eigen::MatrixXd CtmcRateMatrix(const QualityVector& model, const ComparisonGraph& graph,
                               double epsilon) {
  const int n = graph.num_items();
  if (model.size() != n) throw DataError("model/graph dimension mismatch");
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      q(i, j) = graph.wins(j, i) / (model[i] + model[j]) + epsilon;
      row += q(i, j);
    }
    q(i, i) = -row;
  }
  return q;
}

Eigen::VectorXd LsrStep(const ComparisonGraph& graph, const Eigen::VectorXd& gamma,
                        double epsilon) {
  const int n = graph.num_items();
  Eigen::Index pivot;
  gamma.maxCoeff(&pivot);

  // Assemble (Qs^T - n*eps*I) with row `pivot` replaced by ones.
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) * 3);
  Eigen::VectorXd diagonal = Eigen::VectorXd::Constant(n, -n * epsilon);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (graph.matchups(i, j) == 0) continue;
      const double inv = 1.0 / (gamma[i] + gamma[j]);
      const double rate_ij = graph.wins(j, i) * inv;  // i -> j
      const double rate_ji = graph.wins(i, j) * inv;  // j -> i
      // Transposed: entry (j, i) carries rate i -> j.
      if (rate_ij != 0.0 && j != pivot) triplets.emplace_back(j, i, rate_ij);
      if (rate_ji != 0.0 && i != pivot) triplets.emplace_back(i, j, rate_ji);
      diagonal[i] -= rate_ij;
      diagonal[j] -= rate_ji;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (i != pivot) triplets.emplace_back(i, i, diagonal[i]);
    triplets.emplace_back(static_cast<int>(pivot), i, 1.0);
  }
  Eigen::SparseMatrix<double> system(n, n);
  system.setFromTriplets(triplets.begin(), triplets.end());
  system.makeCompressed();

  Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, -epsilon);
  rhs[pivot] = 1.0;

  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(system);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("I-LSR linear system is singular");
  }
  Eigen::VectorXd next = solver.solve(rhs);
  if (solver.info() != Eigen::Success || !next.allFinite()) {
    throw NumericalError("I-LSR linear solve failed");
  }
  next = next.cwiseMax(kMinQuality);
  return next / next.sum();
}

FitResult FitMleDetailed(const Dataset& data, const FitConfig& config) {
  config.Validate();
  const ComparisonGraph graph = BuildGraph(data);
  if (config.epsilon == 0.0 && !IsStronglyConnected(graph)) {
    throw MleExistenceError(
        "MLE does not exist: the comparison graph is not strongly connected "
        "(use a positive epsilon prior)");
  }
  const int n = data.num_items();
  Eigen::VectorXd gamma = Eigen::VectorXd::Constant(n, 1.0 / n);
  for (int iter = 1; iter <= config.max_iter; ++iter) {
    Eigen::VectorXd next = LsrStep(graph, gamma, config.epsilon);
    const double change = (next - gamma).cwiseAbs().maxCoeff();
    gamma = std::move(next);
    if (change < config.tol) return {QualityVector::Normalized(std::move(gamma)), iter};
  }
  throw ConvergenceError("I-LSR did not converge in " + std::to_string(config.max_iter) +
                             " iterations",
                         std::vector<double>(gamma.data(), gamma.data() + gamma.size()));
}

QualityVector FitMle(const Dataset& data, const FitConfig& config) {
  return FitMleDetailed(data, config).gamma;
}

}  // namespace pairshrink
