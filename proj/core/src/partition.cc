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

#include "pairshrink/partition.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "pairshrink/errors.h"
#include "pairshrink/random.h"

namespace pairshrink {

std::vector<Fold> SplitFolds(const Dataset& data, int k, std::uint64_t seed) {
  if (k < 2) throw DataError("need at least 2 folds, got " + std::to_string(k));
  if (k > data.size()) {
    throw DataError("cannot split " + std::to_string(data.size()) + " records into " +
                    std::to_string(k) + " folds");
  }
  std::vector<int> perm(data.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng = MakeRng(seed, 0);
  Shuffle(perm, rng);

  const int n = data.size();
  std::vector<int> bounds(k + 1, 0);
  for (int f = 0; f < k; ++f) {
    // Floor division puts the remainder on the last folds.
    bounds[f + 1] = static_cast<int>(static_cast<long long>(n) * (f + 1) / k);
  }
  std::vector<Fold> folds;
  folds.reserve(k);
  for (int f = 0; f < k; ++f) {
    std::vector<Comparison> train, test;
    for (int pos = 0; pos < n; ++pos) {
      const Comparison& c = data[perm[pos]];
      (pos >= bounds[f] && pos < bounds[f + 1] ? test : train).push_back(c);
    }
    folds.push_back({data.WithRecords(std::move(train)), data.WithRecords(std::move(test))});
  }
  return folds;
}

RaschStructure::RaschStructure(std::vector<int> group) : group_(std::move(group)) {
  for (int g : group_) {
    if (g != 0 && g != 1) throw DataError("rasch group labels must be 0 or 1");
    ++sizes_[g];
  }
  if (sizes_[0] == 0 || sizes_[1] == 0) throw DataError("rasch partition has an empty group");
}

std::optional<RaschStructure> DetectRasch(const Dataset& data,
                                          const std::optional<RaschStructure>& declared) {
  if (declared) {
    if (declared->num_items() != data.num_items()) {
      throw DataError("partition covers " + std::to_string(declared->num_items()) +
                      " items, data has " + std::to_string(data.num_items()));
    }
    for (int k = 0; k < data.size(); ++k) {
      const Comparison& c = data[k];
      if (declared->group_of(c.winner) == declared->group_of(c.loser)) {
        throw DataError("record " + std::to_string(k) + " (" +
                        data.universe().id(c.winner) + " beat " +
                        data.universe().id(c.loser) + ") is within one group");
      }
    }
    return declared;
  }

  const int n = data.num_items();
  std::vector<std::vector<int>> adjacency(n);
  for (const Comparison& c : data.records()) {
    adjacency[c.winner].push_back(c.loser);
    adjacency[c.loser].push_back(c.winner);
  }
  std::vector<int> colour(n, -1);
  for (int root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adjacency[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  const int ones = static_cast<int>(std::count(colour.begin(), colour.end(), 1));
  if (ones == 0 || ones == n) return std::nullopt;
  return RaschStructure(std::move(colour));
}

RaschStructure ParsePartition(std::istream& in, const ItemUniverse& universe) {
  std::vector<int> group(universe.size(), -1);
  std::map<std::string, int> labels;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError(line_no, "expected 'item,group'");
    const std::string id = line.substr(0, comma);
    const std::string label = line.substr(comma + 1);
    const auto item = universe.Find(id);
    if (!item) throw ParseError(line_no, "unknown item '" + id + "'");
    auto [it, inserted] = labels.emplace(label, static_cast<int>(labels.size()));
    if (it->second > 1) throw ParseError(line_no, "more than two groups");
    group[*item] = it->second;
  }
  for (int i = 0; i < universe.size(); ++i) {
    if (group[i] == -1) throw DataError("item '" + universe.id(i) + "' has no group");
  }
  return RaschStructure(std::move(group));
}

}  // namespace pairshrink
