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

// Out-of-sample evaluation: repeated k-fold cross-validation and
// subsample learning curves.

#ifndef PAIRSHRINK_CV_H_
#define PAIRSHRINK_CV_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pairshrink/covariance.h"
#include "pairshrink/dataset.h"
#include "pairshrink/pipeline.h"

namespace pairshrink {

// nullopt is the unshrunk MLE baseline.
using Estimator = std::optional<CovarianceScheme>;

std::string_view EstimatorName(const Estimator& estimator);  // "mle" or SchemeName
// Accepts "mle" and the covariance scheme names.
std::optional<Estimator> ParseEstimator(std::string_view name);

struct SchemeScore {
  Estimator estimator;
  double win_rate_mse = 0.0;
  double matchup_brier = 0.0;
  // (MSE_MLE - MSE) / MSE_MLE on the averaged errors.
  double win_rate_improvement = 0.0;
  double matchup_improvement = 0.0;
  // Means over runs x folds; set only when a ground truth was supplied.
  std::optional<double> alpha;
  std::optional<double> beta;
};

struct EvalReport {
  std::vector<SchemeScore> scores;
  int folds = 0;
  int runs = 0;
  std::uint64_t seed = 0;
};

// For every run and fold: fit the MLE on the training part, shrink it with
// each estimator (covariance settings from `options`, whose `scheme` is
// overridden), and score win-rate MSE and matchup Brier on the test part.
// Run r splits with substream r of `seed`. With `truth`, alpha and beta
// against it are averaged too.
EvalReport RunCv(const Dataset& data, std::span<const Estimator> estimators, int folds,
                 int runs, const ShrinkOptions& options, std::uint64_t seed,
                 const QualityVector* truth = nullptr);

struct CurvePoint {
  double fraction = 0.0;
  int train_size = 0;
  double win_rate_mse_mle = 0.0;
  double win_rate_mse_shr = 0.0;
  double matchup_brier_mle = 0.0;
  double matchup_brier_shr = 0.0;

  // Ratios of the run-averaged errors.
  double win_rate_ratio() const { return win_rate_mse_shr / win_rate_mse_mle; }
  double matchup_ratio() const { return matchup_brier_shr / matchup_brier_mle; }
};

// {0.01, 0.02, 0.05, 0.10, 0.20, 0.40}.
std::vector<double> DefaultCurveFractions();
inline constexpr int kDefaultCurveRuns = 25;

// For each run, shuffles the records; for each fraction trains on the first
// round(fraction * N) records (at least one) and tests on all the rest.
// Throws DataError for fractions outside (0, 1) or an empty test split.
std::vector<CurvePoint> LearningCurve(const Dataset& data, std::span<const double> fractions,
                                      const ShrinkOptions& options, int runs,
                                      std::uint64_t seed);

}  // namespace pairshrink

#endif  // PAIRSHRINK_CV_H_
