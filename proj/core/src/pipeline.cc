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

#include "pairshrink/pipeline.h"

#include "pairshrink/errors.h"
#include "pairshrink/fisher.h"
#include "pairshrink/random.h"

namespace pairshrink {

std::string_view PriorKindName(PriorKind kind) {
  return kind == PriorKind::kRasch ? "rasch" : "uniform";
}

PriorSpec BuildPrior(const QualityVector& mle, const ShrinkOptions& options) {
  PriorSpec prior;
  if (options.prior == PriorKind::kRasch) {
    if (!options.rasch) throw DataError("rasch prior needs a partition");
    prior.target = RaschTarget(mle, *options.rasch);
  } else {
    prior.target = UniformTarget(mle.size());
  }
  prior.covariance = DirichletPriorCovariance(mle, options.prior_form);
  return prior;
}

ShrinkResult Shrink(const Dataset& data, const QualityVector& mle,
                    const ShrinkOptions& options, std::uint64_t seed) {
  ShrinkResult result{mle, mle, {}, std::nullopt, std::nullopt, BuildPrior(mle, options)};

  if (!IsBootstrapScheme(options.scheme)) {
    const InformationMatrix info = options.scheme == CovarianceScheme::kFisherObserved
                                       ? ObservedInformation(mle, data)
                                       : ExpectedInformation(mle, data);
    if (options.implicit) {
      result.covariance = {info.Total(), options.scheme, /*is_inverse=*/true};
      result.shrunk = JamesSteinImplicit(mle, result.covariance.matrix, result.prior);
    } else {
      result.covariance = CovarianceFromInformation(info);
      result.shrunk = JamesStein(mle, result.covariance, result.prior);
    }
    return result;
  }

  const BootstrapScheme scheme = BootstrapScheme::From(options.scheme);
  const double nu = options.nu ? *options.nu
                               : SelectNu(data, scheme, options.nu_grid, options,
                                          DeriveSeed(seed, 2));
  result.run = RunBootstrap(data, scheme, options.num_replicates, options.fit,
                            DeriveSeed(seed, 1), &mle);
  result.nu = nu;
  result.covariance = LedoitWolfShrink(SampleCovariance(*result.run), nu);
  result.shrunk = JamesStein(mle, result.covariance, result.prior);
  return result;
}

ShrinkResult FitAndShrink(const Dataset& data, const ShrinkOptions& options,
                          std::uint64_t seed) {
  return Shrink(data, FitMle(data, options.fit), options, seed);
}

}  // namespace pairshrink
