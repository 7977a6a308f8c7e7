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

#include "pairshrink/graph.h"

#include <algorithm>
#include <memory>
#include <utility>

#include "pairshrink/errors.h"

namespace pairshrink {

ComparisonGraph BuildGraph(const Dataset& data) {
  const int n = data.num_items();
  ComparisonGraph graph;
  graph.wins = Eigen::MatrixXi::Zero(n, n);
  for (const Comparison& c : data.records()) ++graph.wins(c.winner, c.loser);
  graph.matchups = graph.wins + graph.wins.transpose();
  return graph;
}

// Iterative Tarjan, so deep chains cannot overflow the call stack.
std::vector<std::vector<int>> StronglyConnectedComponents(const ComparisonGraph& graph) {
  const int n = graph.num_items();
  std::vector<std::vector<int>> successors(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (graph.wins(j, i) > 0) successors[i].push_back(j);
    }
  }

  std::vector<int> order(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> call;  // (vertex, next successor)
  std::vector<std::vector<int>> components;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (order[root] != -1) continue;
    call.emplace_back(root, 0);
    order[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < successors[v].size()) {
        const int w = successors[v][next++];
        if (order[w] == -1) {
          order[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], order[w]);
        }
        continue;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) {
        const int parent = call.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[finished]);
      }
      if (lowlink[finished] == order[finished]) {
        std::vector<int> component;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != finished);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

bool IsStronglyConnected(const ComparisonGraph& graph) {
  return StronglyConnectedComponents(graph).size() == 1;
}

RestrictedDataset RestrictToLargestScc(const Dataset& data) {
  const auto components = StronglyConnectedComponents(BuildGraph(data));
  // Components are ordered by smallest member, so the first maximum wins ties.
  const std::vector<int>* best = &components.front();
  for (const auto& component : components) {
    if (component.size() > best->size()) best = &component;
  }
  if (best->size() < 2) throw NumericalError("no estimable core");

  const int n = data.num_items();
  std::vector<int> remap(n, -1);
  std::vector<std::string> kept_ids;
  for (int item : *best) {
    remap[item] = static_cast<int>(kept_ids.size());
    kept_ids.push_back(data.universe().id(item));
  }
  std::vector<std::string> removed;
  for (int i = 0; i < n; ++i) {
    if (remap[i] == -1) removed.push_back(data.universe().id(i));
  }
  std::vector<Comparison> records;
  for (const Comparison& c : data.records()) {
    if (remap[c.winner] != -1 && remap[c.loser] != -1) {
      records.push_back({remap[c.winner], remap[c.loser]});
    }
  }
  return {Dataset(std::make_shared<const ItemUniverse>(std::move(kept_ids)),
                  std::move(records)),
          std::move(removed)};
}

}  // namespace pairshrink
