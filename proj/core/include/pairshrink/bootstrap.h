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

// Bootstrap estimates of the MLE covariance.
//
// A replicate is either blocked (the matchup counts of every pair are kept)
// or not (N records drawn with replacement), and either parametric (winners
// redrawn from the fitted model) or not (observed outcomes reused):
//
//   b,np   per pair, resample that pair's records with replacement
//   b,p    keep every matchup, redraw its winner from the model
//   nb,np  draw N records with replacement
//   nb,p   draw N matchups with replacement, redraw winners from the model
//
// Replicates are always fitted with the epsilon prior, so a replicate whose
// comparison graph is not strongly connected still has an estimate.

#ifndef PAIRSHRINK_BOOTSTRAP_H_
#define PAIRSHRINK_BOOTSTRAP_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pairshrink/covariance.h"
#include "pairshrink/dataset.h"
#include "pairshrink/mnl.h"
#include "pairshrink/random.h"

namespace pairshrink {

struct BootstrapScheme {
  bool blocked = true;
  bool parametric = true;

  CovarianceScheme covariance_scheme() const;
  std::string_view name() const { return SchemeName(covariance_scheme()); }
  bool operator==(const BootstrapScheme&) const = default;

  // Throws DataError for the Fisher schemes.
  static BootstrapScheme From(CovarianceScheme scheme);
};

inline constexpr int kDefaultReplicates = 200;

// One replicate of `data` with the same number of records. Parametric
// schemes need `model`; throws DataError without one.
Dataset MakeReplicate(const Dataset& data, BootstrapScheme scheme,
                      const QualityVector* model, Rng& rng);

struct BootstrapRun {
  BootstrapScheme scheme;
  std::uint64_t seed = 0;
  std::vector<QualityVector> gammas;

  int num_replicates() const { return static_cast<int>(gammas.size()); }
};

// Fits `num_replicates` replicates. Replicate k draws from substream k of
// `seed`, so the run is reproducible and order independent. Parametric
// schemes use `model`, or fit one on `data` when it is null.
//
// Throws DataError if num_replicates < 2, NumericalError naming the
// replicate if a fit fails.
BootstrapRun RunBootstrap(const Dataset& data, BootstrapScheme scheme, int num_replicates,
                          const FitConfig& fit, std::uint64_t seed,
                          const QualityVector* model = nullptr);

// Unbiased sample covariance of the replicate estimates.
CovarianceEstimate SampleCovariance(const BootstrapRun& run);

// (1 - nu) * sigma + nu * mean(diag(sigma)) * I. Throws DataError unless
// 0 <= nu <= 1 and sigma is an explicit covariance.
CovarianceEstimate LedoitWolfShrink(const CovarianceEstimate& sigma, double nu);

// {0, 0.1, ..., 1}.
std::vector<double> DefaultNuGrid();

}  // namespace pairshrink

#endif  // PAIRSHRINK_BOOTSTRAP_H_
