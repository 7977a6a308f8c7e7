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

// End-to-end shrinkage: covariance estimate for a chosen scheme, prior, and
// the James-Stein step.

#ifndef PAIRSHRINK_PIPELINE_H_
#define PAIRSHRINK_PIPELINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pairshrink/bootstrap.h"
#include "pairshrink/covariance.h"
#include "pairshrink/dataset.h"
#include "pairshrink/mnl.h"
#include "pairshrink/partition.h"
#include "pairshrink/shrinkage.h"

namespace pairshrink {

enum class PriorKind { kUniform, kRasch };

std::string_view PriorKindName(PriorKind kind);

struct ShrinkOptions {
  CovarianceScheme scheme = CovarianceScheme::kFisherExpected;
  FitConfig fit;
  int num_replicates = kDefaultReplicates;
  // Ledoit-Wolf factor for bootstrap schemes; chosen by SelectNu over
  // `nu_grid` when unset.
  std::optional<double> nu;
  std::vector<double> nu_grid = DefaultNuGrid();
  PriorKind prior = PriorKind::kUniform;
  std::optional<RaschStructure> rasch;  // required for PriorKind::kRasch
  PriorCovarianceForm prior_form = PriorCovarianceForm::kDirichlet;
  // Fisher schemes only: shrink with (I + A S)^-1 instead of inverting the
  // information.
  bool implicit = false;
};

struct ShrinkResult {
  QualityVector mle;
  QualityVector shrunk;
  // Explicit covariance, or S = N * information when `implicit` is set.
  CovarianceEstimate covariance;
  std::optional<BootstrapRun> run;
  std::optional<double> nu;
  PriorSpec prior;
};

// Target (uniform or Rasch group means) and Dirichlet covariance around
// `mle`. Throws DataError if a Rasch prior lacks a structure.
PriorSpec BuildPrior(const QualityVector& mle, const ShrinkOptions& options);

// Shrinks `mle` (fitted on `data`). Bootstrap draws derive from `seed`.
ShrinkResult Shrink(const Dataset& data, const QualityVector& mle,
                    const ShrinkOptions& options, std::uint64_t seed);

// Fits the MLE with options.fit, then shrinks.
ShrinkResult FitAndShrink(const Dataset& data, const ShrinkOptions& options,
                          std::uint64_t seed);

// Chooses the Ledoit-Wolf factor by 2-fold cross-validation on `data`: per
// fold, fit and bootstrap the training half once, then score the James-Stein
// estimate for every nu in `grid` by matchup Brier on the held-out half.
// Returns the nu with the lowest mean score; ties go to the larger nu.
// Prior settings and the replicate count come from `options`.
double SelectNu(const Dataset& data, BootstrapScheme scheme, std::span<const double> grid,
                const ShrinkOptions& options, std::uint64_t seed);

// Mean held-out Brier for every grid value, in grid order (SelectNu's
// scores).
std::vector<double> NuScores(const Dataset& data, BootstrapScheme scheme,
                             std::span<const double> grid, const ShrinkOptions& options,
                             std::uint64_t seed);

}  // namespace pairshrink

#endif  // PAIRSHRINK_PIPELINE_H_
