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

#include "pairshrink/metrics.h"

#include <cmath>

#include "pairshrink/errors.h"

namespace pairshrink {
namespace {

void CheckSameSize(const QualityVector& a, const QualityVector& b) {
  if (a.size() != b.size()) throw DataError("quality vectors differ in dimension");
}

double RelativeImprovement(double mle_error, double shr_error) {
  if (mle_error == 0.0) {
    throw NumericalError("improvement undefined: the MLE equals the truth");
  }
  return (mle_error - shr_error) / mle_error;
}

}  // namespace

void Schedule::Validate() const {
  for (const auto& [a, b] : games) {
    if (a < 0 || b < 0 || a >= num_items || b >= num_items || a == b) {
      throw DataError("schedule has an invalid matchup");
    }
  }
}

Eigen::MatrixXi Schedule::Matchups() const {
  Eigen::MatrixXi b = Eigen::MatrixXi::Zero(num_items, num_items);
  for (const auto& [i, j] : games) {
    ++b(i, j);
    ++b(j, i);
  }
  return b;
}

Schedule Schedule::FromDataset(const Dataset& data) {
  Schedule s{data.num_items(), {}};
  s.games.reserve(data.size());
  for (const Comparison& c : data.records()) s.games.emplace_back(c.winner, c.loser);
  return s;
}

double PairwiseDistance(const QualityVector& g, const QualityVector& h) {
  CheckSameSize(g, h);
  const int n = g.size();
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      total += std::abs(g[i] / (g[i] + g[j]) - h[i] / (h[i] + h[j]));
    }
  }
  return total / (static_cast<double>(n) * n);
}

double AlphaMetric(const QualityVector& truth, const QualityVector& mle,
                   const QualityVector& shr) {
  CheckSameSize(truth, mle);
  CheckSameSize(truth, shr);
  return RelativeImprovement((truth.values() - mle.values()).squaredNorm(),
                             (truth.values() - shr.values()).squaredNorm());
}

double BetaMetric(const QualityVector& truth, const QualityVector& mle,
                  const QualityVector& shr) {
  return RelativeImprovement(PairwiseDistance(truth, mle), PairwiseDistance(truth, shr));
}

std::vector<std::optional<double>> PredictedWinRate(const QualityVector& model,
                                                    const Schedule& schedule) {
  if (schedule.num_items != model.size()) throw DataError("schedule/model dimension mismatch");
  const int n = model.size();
  std::vector<double> sum(n, 0.0);
  std::vector<int> games(n, 0);
  for (const auto& [i, j] : schedule.games) {
    const double p = ChoiceProb(model, i, j);
    sum[i] += p;
    sum[j] += 1.0 - p;
    ++games[i];
    ++games[j];
  }
  std::vector<std::optional<double>> rate(n);
  for (int i = 0; i < n; ++i) {
    if (games[i] > 0) rate[i] = sum[i] / games[i];
  }
  return rate;
}

double WinRateMse(const QualityVector& model, const Dataset& test) {
  if (test.empty()) throw DataError("win-rate MSE needs a non-empty test set");
  const auto predicted = PredictedWinRate(model, Schedule::FromDataset(test));
  const int n = test.num_items();
  std::vector<int> wins(n, 0), games(n, 0);
  for (const Comparison& c : test.records()) {
    ++wins[c.winner];
    ++games[c.winner];
    ++games[c.loser];
  }
  double total = 0.0;
  int counted = 0;
  for (int i = 0; i < n; ++i) {
    if (games[i] == 0) continue;
    const double diff = static_cast<double>(wins[i]) / games[i] - *predicted[i];
    total += diff * diff;
    ++counted;
  }
  return total / counted;
}

double MatchupBrier(const QualityVector& model, const Dataset& test) {
  if (test.empty()) throw DataError("matchup Brier needs a non-empty test set");
  if (model.size() != test.num_items()) throw DataError("model/data dimension mismatch");
  double total = 0.0;
  for (const Comparison& c : test.records()) {
    const double miss = 1.0 - ChoiceProb(model, c.winner, c.loser);
    total += miss * miss;
  }
  return total / test.size();
}

}  // namespace pairshrink
