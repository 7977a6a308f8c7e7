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

#ifndef PAIRSHRINK_DATASET_H_
#define PAIRSHRINK_DATASET_H_

#include <istream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pairshrink {

// Ordered set of external item identifiers, densely indexed 0..n-1.
class ItemUniverse {
 public:
  // Throws DataError on duplicate ids or fewer than two items.
  explicit ItemUniverse(std::vector<std::string> ids);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int index) const { return ids_.at(index); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<int> Find(std::string_view id) const;

  bool operator==(const ItemUniverse& other) const { return ids_ == other.ids_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
};

// One observed choice: `winner` was chosen over `loser`.
struct Comparison {
  int winner = 0;
  int loser = 0;
  bool operator==(const Comparison&) const = default;
};

// Immutable multiset of comparisons over a shared universe. Copies share the
// universe, so subsets and replicates are cheap.
class Dataset {
 public:
  // Throws DataError if a record is a self-comparison or out of range.
  Dataset(std::shared_ptr<const ItemUniverse> universe,
          std::vector<Comparison> records);

  // Same universe, different records.
  Dataset WithRecords(std::vector<Comparison> records) const;

  const ItemUniverse& universe() const { return *universe_; }
  const std::shared_ptr<const ItemUniverse>& shared_universe() const {
    return universe_;
  }
  int num_items() const { return universe_->size(); }
  int size() const { return static_cast<int>(records_.size()); }
  bool empty() const { return records_.empty(); }
  std::span<const Comparison> records() const { return records_; }
  const Comparison& operator[](int k) const { return records_[k]; }

 private:
  std::shared_ptr<const ItemUniverse> universe_;
  std::vector<Comparison> records_;
};

// Parses `winner,loser[,count]` CSV with a mandatory header row. Rows with a
// count are expanded `count` times; ids are indexed by first appearance.
// Throws ParseError naming the offending line.
Dataset ParseComparisons(std::istream& in);
Dataset ParseComparisons(std::string_view text);

// Writes `winner,loser` CSV, one row per record.
void WriteComparisons(const Dataset& data, std::ostream& out);

}  // namespace pairshrink

#endif  // PAIRSHRINK_DATASET_H_
