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

#ifndef PAIRSHRINK_METRICS_H_
#define PAIRSHRINK_METRICS_H_

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "pairshrink/dataset.h"
#include "pairshrink/mnl.h"

namespace pairshrink {

// Unordered matchups with multiplicity.
struct Schedule {
  int num_items = 0;
  std::vector<std::pair<int, int>> games;

  // Throws DataError on out-of-range or self pairs.
  void Validate() const;
  Eigen::MatrixXi Matchups() const;
  int size() const { return static_cast<int>(games.size()); }

  static Schedule FromDataset(const Dataset& data);
};

// (1/n^2) * sum over ordered pairs i != j of |p_ij(g) - p_ij(h)|.
double PairwiseDistance(const QualityVector& g, const QualityVector& h);

// Relative squared-error improvement of `shr` over `mle` against `truth`.
// Throws NumericalError when mle == truth exactly.
double AlphaMetric(const QualityVector& truth, const QualityVector& mle,
                   const QualityVector& shr);

// Same, measured with PairwiseDistance.
double BetaMetric(const QualityVector& truth, const QualityVector& mle,
                  const QualityVector& shr);

// Mean of p_ij over each item's scheduled games; nullopt for items with no
// games.
std::vector<std::optional<double>> PredictedWinRate(const QualityVector& model,
                                                    const Schedule& schedule);

// Mean over items with at least one test game of (observed win fraction -
// predicted win rate on the test schedule)^2. Throws DataError when empty.
double WinRateMse(const QualityVector& model, const Dataset& test);

// Mean over records of (1 - p_winner,loser)^2. Throws DataError when empty.
double MatchupBrier(const QualityVector& model, const Dataset& test);

}  // namespace pairshrink

#endif  // PAIRSHRINK_METRICS_H_
