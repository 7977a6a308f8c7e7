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

// Synthetic ground truth, schedules and outcomes.

#ifndef PAIRSHRINK_SYNTH_H_
#define PAIRSHRINK_SYNTH_H_

#include <cstdint>
#include <memory>

#include "pairshrink/dataset.h"
#include "pairshrink/metrics.h"
#include "pairshrink/mnl.h"
#include "pairshrink/random.h"

namespace pairshrink {

// Dirichlet(1, ..., 1) draw. Throws DataError for n < 2.
QualityVector SampleSimplexUniform(int n, Rng& rng);

// Every unordered pair `multiplicity` times.
Schedule RoundRobinSchedule(int n, int multiplicity = 1);

// Two conferences of n/2 items (membership randomized by `seed`). Every item
// plays exactly `within` games inside its conference and `across` games
// against the other one; pairs repeat only when a quota exceeds the number
// of distinct opponents. Throws DataError if n is odd or the quotas cannot
// be met (within * n/2 odd).
Schedule TwoConferenceSchedule(int n, int within, int across, std::uint64_t seed);

// Universe with ids "item0", "item1", ...
std::shared_ptr<const ItemUniverse> MakeNumberedUniverse(int n);

// One record per scheduled game, winner drawn from `truth`.
Dataset SimulateOutcomes(const QualityVector& truth, const Schedule& schedule, Rng& rng,
                         std::shared_ptr<const ItemUniverse> universe = nullptr);

}  // namespace pairshrink

#endif  // PAIRSHRINK_SYNTH_H_
