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

#include "pairshrink/errors.h"
#include "pairshrink/metrics.h"
#include "pairshrink/partition.h"
#include "pairshrink/pipeline.h"
#include "pairshrink/random.h"

namespace pairshrink {

std::vector<double> NuScores(const Dataset& data, BootstrapScheme scheme,
                             std::span<const double> grid, const ShrinkOptions& options,
                             std::uint64_t seed) {
  if (grid.empty()) throw DataError("nu grid is empty");
  for (double nu : grid) {
    if (!(nu >= 0.0 && nu <= 1.0)) throw DataError("nu grid values must lie in [0, 1]");
  }
  const auto folds = SplitFolds(data, 2, DeriveSeed(seed, 0));
  std::vector<double> scores(grid.size(), 0.0);
  for (std::size_t f = 0; f < folds.size(); ++f) {
    const QualityVector mle = FitMle(folds[f].train, options.fit);
    const BootstrapRun run = RunBootstrap(folds[f].train, scheme, options.num_replicates,
                                          options.fit, DeriveSeed(seed, f + 1), &mle);
    const CovarianceEstimate sample = SampleCovariance(run);
    const PriorSpec prior = BuildPrior(mle, options);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const QualityVector shrunk = JamesStein(mle, LedoitWolfShrink(sample, grid[g]), prior);
      scores[g] += MatchupBrier(shrunk, folds[f].test) / folds.size();
    }
  }
  return scores;
}

double SelectNu(const Dataset& data, BootstrapScheme scheme, std::span<const double> grid,
                const ShrinkOptions& options, std::uint64_t seed) {
  if (grid.size() == 1) {
    if (!(grid[0] >= 0.0 && grid[0] <= 1.0)) throw DataError("nu must lie in [0, 1]");
    return grid[0];
  }
  const std::vector<double> scores = NuScores(data, scheme, grid, options, seed);
  double best_score = scores[0];
  for (double s : scores) best_score = std::min(best_score, s);
  // Scores within rounding of the best count as ties; prefer more shrinkage.
  const double slack = 1e-12 * std::abs(best_score);
  double chosen = -1.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (scores[g] <= best_score + slack) chosen = std::max(chosen, grid[g]);
  }
  return chosen;
}

}  // namespace pairshrink
