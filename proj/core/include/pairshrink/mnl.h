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

// Bradley-Terry-Luce model: probabilities, likelihood and the maximum
// likelihood estimate computed by iterative Luce spectral ranking (I-LSR).
//
// Each I-LSR iteration takes the current estimate g, builds the continuous
// time Markov chain whose rate from i to j is wins(j, i) / (g_i + g_j), and
// takes its stationary distribution as the next estimate. A fixed point is a
// stationary point of the log-likelihood.
//
// A Dirichlet-style prior of strength epsilon adds epsilon "choices" of every
// item from the full universe. In the chain this adds epsilon to every
// off-diagonal rate, which would make the generator dense. Writing the dense
// generator as Q = Qs - n*eps*I + eps*1*1^T, where Qs is the sparse generator
// of the data alone, the balance equations on the simplex become the sparse
// system
//
//   (Qs^T - n*eps*I) g = -eps * 1,
//
// which is what FitMle solves. With the scale fixed by sum(g) = 1 the two
// systems have the same solution.

#ifndef PAIRSHRINK_MNL_H_
#define PAIRSHRINK_MNL_H_

#include <Eigen/Core>

#include "pairshrink/dataset.h"
#include "pairshrink/graph.h"

namespace pairshrink {

// Strictly positive quality parameters normalized to sum to one.
class QualityVector {
 public:
  static constexpr double kSumTolerance = 1e-9;

  // Throws DataError unless every entry is positive and the sum is 1.
  explicit QualityVector(Eigen::VectorXd gamma);

  // Rescales positive weights onto the simplex.
  static QualityVector Normalized(Eigen::VectorXd weights);
  static QualityVector Uniform(int n);

  int size() const { return static_cast<int>(gamma_.size()); }
  double operator[](int i) const { return gamma_[i]; }
  const Eigen::VectorXd& values() const { return gamma_; }

 private:
  Eigen::VectorXd gamma_;
};

struct FitConfig {
  double epsilon = 1e-6;  // prior strength, >= 0
  double tol = 1e-9;      // L-infinity change between iterates
  int max_iter = 2000;

  // Throws DataError on out-of-range fields.
  void Validate() const;
};

// P(i chosen over j) = g_i / (g_i + g_j). Throws DataError if i == j.
double ChoiceProb(const QualityVector& model, int i, int j);

// Sum over records of log g_w - log(g_w + g_l). Scale invariant.
double LogLikelihood(const QualityVector& model, const Dataset& data);

// LogLikelihood plus epsilon * sum_x (log g_x - log sum_y g_y), the
// objective FitMle maximizes.
double PenalizedLogLikelihood(const QualityVector& model, const Dataset& data,
                              double epsilon);

// Dense chain generator at `model`: off-diagonal Q(i, j) =
// wins(j, i) / (g_i + g_j) + epsilon, rows summing to zero.
Eigen::MatrixXd CtmcRateMatrix(const QualityVector& model, const ComparisonGraph& graph,
                               double epsilon);

// One I-LSR update: the stationary distribution of the chain at `gamma`,
// obtained from the sparse prior-shifted system. The equation of the
// largest entry of `gamma` is replaced by the normalization sum = 1.
// Returns the (normalized, strictly positive) next iterate.
Eigen::VectorXd LsrStep(const ComparisonGraph& graph, const Eigen::VectorXd& gamma,
                        double epsilon);

struct FitResult {
  QualityVector gamma;
  int iterations;
};

// Maximum likelihood estimate (maximum a posteriori when epsilon > 0),
// starting from the uniform vector.
//
// Throws MleExistenceError when epsilon == 0 and the comparison graph is not
// strongly connected, ConvergenceError (carrying the last iterate) when
// max_iter is reached, DataError on an invalid config.
FitResult FitMleDetailed(const Dataset& data, const FitConfig& config = {});
QualityVector FitMle(const Dataset& data, const FitConfig& config = {});

}  // namespace pairshrink

#endif  // PAIRSHRINK_MNL_H_
