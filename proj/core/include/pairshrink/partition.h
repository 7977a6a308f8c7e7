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

#ifndef PAIRSHRINK_PARTITION_H_
#define PAIRSHRINK_PARTITION_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <vector>

#include "pairshrink/dataset.h"

namespace pairshrink {

struct Fold {
  Dataset train;
  Dataset test;
};

// Shuffles the records with `seed` and cuts them into k contiguous folds
// whose sizes differ by at most one (the larger folds come last). Fold i
// tests on slice i and trains on the rest. Requires 2 <= k <= N.
std::vector<Fold> SplitFolds(const Dataset& data, int k, std::uint64_t seed);

// Bipartition of the universe for Rasch-style data: every comparison pairs
// an item of group 0 with an item of group 1.
class RaschStructure {
 public:
  // `group[i]` is 0 or 1. Throws DataError if either group is empty.
  explicit RaschStructure(std::vector<int> group);

  int group_of(int item) const { return group_[item]; }
  const std::vector<int>& groups() const { return group_; }
  int group_size(int g) const { return sizes_[g]; }
  int num_items() const { return static_cast<int>(group_.size()); }

 private:
  std::vector<int> group_;
  int sizes_[2] = {0, 0};
};

// With a declared partition: validates that every record crosses groups and
// returns it, else throws DataError naming the first offending record.
// Without one: 2-colours the undirected matchup graph, returning the
// bipartition (components coloured from their smallest item, which gets
// group 0) or nullopt when an odd cycle exists or a group would be empty.
std::optional<RaschStructure> DetectRasch(
    const Dataset& data, const std::optional<RaschStructure>& declared = std::nullopt);

// Reads `item,group` CSV (header required; group is any two distinct
// labels, the first label seen becomes group 0). Every item of `universe`
// must be assigned.
RaschStructure ParsePartition(std::istream& in, const ItemUniverse& universe);

}  // namespace pairshrink

#endif  // PAIRSHRINK_PARTITION_H_
