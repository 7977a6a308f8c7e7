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

#include "pairshrink/cv.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pairshrink/errors.h"
#include "pairshrink/metrics.h"
#include "pairshrink/partition.h"
#include "pairshrink/random.h"

namespace pairshrink {

std::string_view EstimatorName(const Estimator& estimator) {
  return estimator ? SchemeName(*estimator) : std::string_view("mle");
}

std::optional<Estimator> ParseEstimator(std::string_view name) {
  if (name == "mle") return Estimator{};
  if (auto scheme = ParseScheme(name)) return Estimator{*scheme};
  return std::nullopt;
}

EvalReport RunCv(const Dataset& data, std::span<const Estimator> estimators, int folds,
                 int runs, const ShrinkOptions& options, std::uint64_t seed,
                 const QualityVector* truth) {
  if (runs < 1) throw DataError("need at least one run");
  if (estimators.empty()) throw DataError("no estimators to evaluate");
  if (truth != nullptr && truth->size() != data.num_items()) {
    throw DataError("truth/data dimension mismatch");
  }
  const std::size_t m = estimators.size();
  std::vector<double> win(m, 0.0), brier(m, 0.0), alpha(m, 0.0), beta(m, 0.0);
  double win_mle = 0.0, brier_mle = 0.0;
  int cells = 0;

  for (int r = 0; r < runs; ++r) {
    const std::uint64_t run_seed = DeriveSeed(seed, r);
    const auto splits = SplitFolds(data, folds, run_seed);
    for (std::size_t f = 0; f < splits.size(); ++f) {
      const Fold& fold = splits[f];
      const QualityVector mle = FitMle(fold.train, options.fit);
      win_mle += WinRateMse(mle, fold.test);
      brier_mle += MatchupBrier(mle, fold.test);
      for (std::size_t e = 0; e < m; ++e) {
        QualityVector estimate = mle;
        if (estimators[e]) {
          ShrinkOptions local = options;
          local.scheme = *estimators[e];
          estimate = Shrink(fold.train, mle, local, DeriveSeed(run_seed, f + 1)).shrunk;
        }
        win[e] += WinRateMse(estimate, fold.test);
        brier[e] += MatchupBrier(estimate, fold.test);
        if (truth != nullptr) {
          alpha[e] += AlphaMetric(*truth, mle, estimate);
          beta[e] += BetaMetric(*truth, mle, estimate);
        }
      }
      ++cells;
    }
  }

  EvalReport report{{}, folds, runs, seed};
  for (std::size_t e = 0; e < m; ++e) {
    SchemeScore score;
    score.estimator = estimators[e];
    score.win_rate_mse = win[e] / cells;
    score.matchup_brier = brier[e] / cells;
    score.win_rate_improvement = (win_mle - win[e]) / win_mle;
    score.matchup_improvement = (brier_mle - brier[e]) / brier_mle;
    if (truth != nullptr) {
      score.alpha = alpha[e] / cells;
      score.beta = beta[e] / cells;
    }
    report.scores.push_back(score);
  }
  return report;
}

std::vector<double> DefaultCurveFractions() { return {0.01, 0.02, 0.05, 0.10, 0.20, 0.40}; }

std::vector<CurvePoint> LearningCurve(const Dataset& data, std::span<const double> fractions,
                                      const ShrinkOptions& options, int runs,
                                      std::uint64_t seed) {
  if (runs < 1) throw DataError("need at least one run");
  const int n = data.size();
  std::vector<CurvePoint> points;
  std::vector<int> sizes;
  for (double f : fractions) {
    if (!(f > 0.0 && f < 1.0)) throw DataError("curve fractions must lie in (0, 1)");
    const int size = std::max(1, static_cast<int>(std::lround(f * n)));
    if (size >= n) throw DataError("fraction leaves no test data");
    sizes.push_back(size);
    points.push_back({f, size});
  }

  std::vector<int> perm(n);
  for (int r = 0; r < runs; ++r) {
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng = MakeRng(seed, static_cast<std::uint64_t>(r));
    Shuffle(perm, rng);
    for (std::size_t p = 0; p < points.size(); ++p) {
      std::vector<Comparison> train, test;
      for (int pos = 0; pos < n; ++pos) {
        (pos < sizes[p] ? train : test).push_back(data[perm[pos]]);
      }
      const Dataset train_set = data.WithRecords(std::move(train));
      const Dataset test_set = data.WithRecords(std::move(test));
      const ShrinkResult fitted =
          FitAndShrink(train_set, options, DeriveSeed(DeriveSeed(seed, r), p + 1));
      points[p].win_rate_mse_mle += WinRateMse(fitted.mle, test_set) / runs;
      points[p].win_rate_mse_shr += WinRateMse(fitted.shrunk, test_set) / runs;
      points[p].matchup_brier_mle += MatchupBrier(fitted.mle, test_set) / runs;
      points[p].matchup_brier_shr += MatchupBrier(fitted.shrunk, test_set) / runs;
    }
  }
  return points;
}

}  // namespace pairshrink
