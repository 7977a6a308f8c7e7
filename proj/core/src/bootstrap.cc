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

#include "pairshrink/bootstrap.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "pairshrink/errors.h"

namespace pairshrink {
namespace {

Comparison DrawOutcome(const QualityVector& model, int a, int b, Rng& rng) {
  return Bernoulli(rng, ChoiceProb(model, a, b)) ? Comparison{a, b} : Comparison{b, a};
}

std::pair<int, int> PairKey(const Comparison& c) {
  return std::minmax(c.winner, c.loser);
}

}  // namespace

CovarianceScheme BootstrapScheme::covariance_scheme() const {
  if (blocked) {
    return parametric ? CovarianceScheme::kBootBlockedParametric
                      : CovarianceScheme::kBootBlockedNonParametric;
  }
  return parametric ? CovarianceScheme::kBootNonBlockedParametric
                    : CovarianceScheme::kBootNonBlockedNonParametric;
}

BootstrapScheme BootstrapScheme::From(CovarianceScheme scheme) {
  switch (scheme) {
    case CovarianceScheme::kBootBlockedParametric: return {true, true};
    case CovarianceScheme::kBootBlockedNonParametric: return {true, false};
    case CovarianceScheme::kBootNonBlockedParametric: return {false, true};
    case CovarianceScheme::kBootNonBlockedNonParametric: return {false, false};
    default: break;
  }
  throw DataError(std::string(SchemeName(scheme)) + " is not a bootstrap scheme");
}

Dataset MakeReplicate(const Dataset& data, BootstrapScheme scheme,
                      const QualityVector* model, Rng& rng) {
  if (scheme.parametric && model == nullptr) {
    throw DataError("parametric bootstrap needs a model");
  }
  if (model != nullptr && model->size() != data.num_items()) {
    throw DataError("model/data dimension mismatch");
  }
  const auto records = data.records();
  std::vector<Comparison> out;
  out.reserve(records.size());

  if (!scheme.blocked) {
    for (std::size_t k = 0; k < records.size(); ++k) {
      const Comparison& drawn = records[UniformIndex(rng, records.size())];
      out.push_back(scheme.parametric ? DrawOutcome(*model, drawn.winner, drawn.loser, rng)
                                      : drawn);
    }
    return data.WithRecords(std::move(out));
  }

  if (scheme.parametric) {
    // B is fixed; only the winners change. Record order is kept.
    for (const Comparison& c : records) {
      const auto [a, b] = PairKey(c);
      out.push_back(DrawOutcome(*model, a, b, rng));
    }
    return data.WithRecords(std::move(out));
  }

  // Each record slot is refilled from its own pair's records, so every pair
  // keeps its count and slots stay in the original order.
  std::map<std::pair<int, int>, std::vector<Comparison>> by_pair;
  for (const Comparison& c : records) by_pair[PairKey(c)].push_back(c);
  for (const Comparison& c : records) {
    const auto& pool = by_pair.at(PairKey(c));
    out.push_back(pool[UniformIndex(rng, pool.size())]);
  }
  return data.WithRecords(std::move(out));
}

BootstrapRun RunBootstrap(const Dataset& data, BootstrapScheme scheme, int num_replicates,
                          const FitConfig& fit, std::uint64_t seed,
                          const QualityVector* model) {
  if (num_replicates < 2) throw DataError("bootstrap needs at least 2 replicates");
  std::optional<QualityVector> fitted;
  if (scheme.parametric && model == nullptr) {
    fitted = FitMle(data, fit);
    model = &*fitted;
  }
  BootstrapRun run{scheme, seed, {}};
  run.gammas.reserve(num_replicates);
  for (int k = 0; k < num_replicates; ++k) {
    Rng rng = MakeRng(seed, static_cast<std::uint64_t>(k));
    const Dataset replicate = MakeReplicate(data, scheme, model, rng);
    try {
      run.gammas.push_back(FitMle(replicate, fit));
    } catch (const Error& e) {
      throw NumericalError("bootstrap replicate " + std::to_string(k) + ": " + e.what());
    }
  }
  return run;
}

CovarianceEstimate SampleCovariance(const BootstrapRun& run) {
  const int k = run.num_replicates();
  if (k < 2) throw DataError("sample covariance needs at least 2 replicates");
  const int n = run.gammas.front().size();
  // Offsets from the first replicate: identical replicates give an exactly
  // zero matrix, which a rounded mean would not.
  Eigen::MatrixXd samples(k, n);
  for (int r = 0; r < k; ++r) {
    samples.row(r) = (run.gammas[r].values() - run.gammas.front().values()).transpose();
  }
  const Eigen::RowVectorXd mean = samples.colwise().mean();
  const Eigen::MatrixXd centered = samples.rowwise() - mean;
  CovarianceEstimate estimate;
  estimate.matrix = (centered.transpose() * centered) / (k - 1);
  estimate.scheme = run.scheme.covariance_scheme();
  return estimate;
}

CovarianceEstimate LedoitWolfShrink(const CovarianceEstimate& sigma, double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) throw DataError("nu must lie in [0, 1]");
  if (sigma.is_inverse) throw DataError("Ledoit-Wolf shrinkage needs an explicit covariance");
  const Eigen::Index n = sigma.matrix.rows();
  const double mean_variance = sigma.matrix.trace() / n;
  CovarianceEstimate out = sigma;
  out.matrix = (1.0 - nu) * sigma.matrix;
  out.matrix.diagonal().array() += nu * mean_variance;
  return out;
}

std::vector<double> DefaultNuGrid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

}  // namespace pairshrink
