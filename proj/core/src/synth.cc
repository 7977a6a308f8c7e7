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

#include "pairshrink/synth.h"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "pairshrink/errors.h"

namespace pairshrink {
namespace {

// Adds a `degree`-regular multigraph on `members` built from circulant
// offsets, all distinct pairs before any repeats.
void AddRegularGames(const std::vector<int>& members, int degree, Rng& rng,
                     std::vector<std::pair<int, int>>& games) {
  const int m = static_cast<int>(members.size());
  if (degree == 0) return;
  if (m < 2 || (static_cast<long long>(m) * degree) % 2 != 0) {
    throw DataError("within-conference quota " + std::to_string(degree) +
                    " is not realizable with " + std::to_string(m) + " items");
  }
  auto add_offset = [&](int k) {
    for (int p = 0; p < m; ++p) games.emplace_back(members[p], members[(p + k) % m]);
  };
  auto add_diameter = [&] {
    for (int p = 0; p < m / 2; ++p) games.emplace_back(members[p], members[p + m / 2]);
  };
  std::vector<int> offsets((m - 1) / 2);
  std::iota(offsets.begin(), offsets.end(), 1);

  const int full_rounds = degree / (m - 1);
  int rest = degree % (m - 1);
  for (int r = 0; r < full_rounds; ++r) {
    for (int k : offsets) add_offset(k);
    if (m % 2 == 0) add_diameter();
  }
  if (rest % 2 == 1) {
    add_diameter();  // m is even here, since m * degree is even
    --rest;
  }
  Shuffle(offsets, rng);
  for (int u = 0; u < rest / 2; ++u) add_offset(offsets[u]);
}

}  // namespace

QualityVector SampleSimplexUniform(int n, Rng& rng) {
  if (n < 2) throw DataError("simplex sample needs n >= 2");
  Eigen::VectorXd draws(n);
  for (int i = 0; i < n; ++i) {
    // Exponential(1); 1 - U lies in (0, 1].
    draws[i] = -std::log(1.0 - Uniform01(rng));
    if (draws[i] <= 0.0) draws[i] = 0x1.0p-53;
  }
  return QualityVector::Normalized(std::move(draws));
}

Schedule RoundRobinSchedule(int n, int multiplicity) {
  if (n < 2) throw DataError("round robin needs n >= 2");
  if (multiplicity < 1) throw DataError("multiplicity must be >= 1");
  Schedule s{n, {}};
  for (int rep = 0; rep < multiplicity; ++rep) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s.games.emplace_back(i, j);
    }
  }
  return s;
}

Schedule TwoConferenceSchedule(int n, int within, int across, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) throw DataError("two-conference schedule needs an even n >= 4");
  if (within < 0 || across < 0 || within + across == 0) {
    throw DataError("game quotas must be non-negative and not both zero");
  }
  const int m = n / 2;
  Rng rng = MakeRng(seed, 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Shuffle(perm, rng);
  const std::vector<int> east(perm.begin(), perm.begin() + m);
  const std::vector<int> west(perm.begin() + m, perm.end());

  Schedule s{n, {}};
  AddRegularGames(east, within, rng, s.games);
  AddRegularGames(west, within, rng, s.games);

  std::vector<int> shifts(m);
  std::iota(shifts.begin(), shifts.end(), 0);
  for (int done = 0; done < across;) {
    Shuffle(shifts, rng);
    for (int k = 0; k < m && done < across; ++k, ++done) {
      for (int p = 0; p < m; ++p) s.games.emplace_back(east[p], west[(p + shifts[k]) % m]);
    }
  }
  return s;
}

std::shared_ptr<const ItemUniverse> MakeNumberedUniverse(int n) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (int i = 0; i < n; ++i) ids.push_back("item" + std::to_string(i));
  return std::make_shared<const ItemUniverse>(std::move(ids));
}

Dataset SimulateOutcomes(const QualityVector& truth, const Schedule& schedule, Rng& rng,
                         std::shared_ptr<const ItemUniverse> universe) {
  schedule.Validate();
  if (schedule.num_items != truth.size()) throw DataError("schedule/truth dimension mismatch");
  if (universe == nullptr) universe = MakeNumberedUniverse(truth.size());
  if (universe->size() != truth.size()) throw DataError("universe/truth dimension mismatch");
  std::vector<Comparison> records;
  records.reserve(schedule.games.size());
  for (const auto& [i, j] : schedule.games) {
    records.push_back(Bernoulli(rng, ChoiceProb(truth, i, j)) ? Comparison{i, j}
                                                              : Comparison{j, i});
  }
  return Dataset(std::move(universe), std::move(records));
}

}  // namespace pairshrink
