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

#ifndef PAIRSHRINK_GRAPH_H_
#define PAIRSHRINK_GRAPH_H_

#include <string>
#include <vector>

#include <Eigen/Core>

#include "pairshrink/dataset.h"

namespace pairshrink {

// Win counts `wins(i, j)` = number of records where i beat j, and the
// symmetric matchup counts `matchups = wins + wins^T`.
struct ComparisonGraph {
  Eigen::MatrixXi wins;
  Eigen::MatrixXi matchups;

  int num_items() const { return static_cast<int>(wins.rows()); }
  long long num_comparisons() const { return wins.cast<long long>().sum(); }
};

ComparisonGraph BuildGraph(const Dataset& data);

// Strongly connected components of the comparison graph. Edges run from
// loser to winner (i -> j whenever wins(j, i) > 0); reversing every edge
// gives the same components. Each component is sorted ascending, and the
// components are listed in order of their smallest member.
std::vector<std::vector<int>> StronglyConnectedComponents(const ComparisonGraph& graph);

bool IsStronglyConnected(const ComparisonGraph& graph);

struct RestrictedDataset {
  Dataset data;
  // Ids of dropped items, in original index order.
  std::vector<std::string> removed;
};

// Keeps only comparisons among the largest strongly connected component
// (ties: larger size, then smaller minimum index) and re-indexes the
// surviving items in their original order. Throws NumericalError
// "no estimable core" if that component has fewer than 2 items.
RestrictedDataset RestrictToLargestScc(const Dataset& data);

}  // namespace pairshrink

#endif  // PAIRSHRINK_GRAPH_H_
