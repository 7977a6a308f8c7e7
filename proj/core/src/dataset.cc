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

#include "pairshrink/dataset.h"

#include <charconv>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "pairshrink/errors.h"

namespace pairshrink {
namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      return fields;
    }
    fields.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

}  // namespace

ItemUniverse::ItemUniverse(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.size() < 2) {
    throw DataError("item universe needs at least 2 items, got " +
                    std::to_string(ids_.size()));
  }
  index_.reserve(ids_.size());
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw DataError("duplicate item id '" + ids_[i] + "'");
    }
  }
}

std::optional<int> ItemUniverse::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Dataset::Dataset(std::shared_ptr<const ItemUniverse> universe,
                 std::vector<Comparison> records)
    : universe_(std::move(universe)), records_(std::move(records)) {
  if (universe_ == nullptr) throw DataError("dataset has no item universe");
  const int n = universe_->size();
  for (std::size_t k = 0; k < records_.size(); ++k) {
    const Comparison& c = records_[k];
    if (c.winner < 0 || c.winner >= n || c.loser < 0 || c.loser >= n) {
      throw DataError("record " + std::to_string(k) + " has an index out of range");
    }
    if (c.winner == c.loser) {
      throw DataError("record " + std::to_string(k) + " compares an item with itself");
    }
  }
}

Dataset Dataset::WithRecords(std::vector<Comparison> records) const {
  return Dataset(universe_, std::move(records));
}

Dataset ParseComparisons(std::istream& in) {
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;
  std::vector<Comparison> records;
  auto intern = [&](std::string_view id) {
    auto [it, inserted] = index.emplace(std::string(id), static_cast<int>(ids.size()));
    if (inserted) ids.emplace_back(id);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  bool has_count = false;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (Trim(view).empty()) continue;
    const auto fields = SplitCommas(view);
    if (!seen_header) {
      seen_header = true;
      const bool ok = (fields.size() == 2 || fields.size() == 3) &&
                      fields[0] == "winner" && fields[1] == "loser" &&
                      (fields.size() == 2 || fields[2] == "count");
      if (!ok) throw ParseError(line_no, "expected header 'winner,loser[,count]'");
      has_count = fields.size() == 3;
      continue;
    }
    const std::size_t expected = has_count ? 3 : 2;
    if (fields.size() < 2 || fields.size() > expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) + " fields, got " +
                                    std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "missing winner or loser id");
    }
    if (fields[0] == fields[1]) {
      throw ParseError(line_no, "item '" + std::string(fields[0]) + "' compared with itself");
    }
    long long count = 1;
    if (fields.size() == 3 && !fields[2].empty()) {
      const auto* first = fields[2].data();
      const auto* last = first + fields[2].size();
      auto [ptr, ec] = std::from_chars(first, last, count);
      if (ec != std::errc() || ptr != last) {
        throw ParseError(line_no, "count '" + std::string(fields[2]) + "' is not an integer");
      }
      if (count <= 0) throw ParseError(line_no, "count must be positive");
    }
    const int w = intern(fields[0]);
    const int l = intern(fields[1]);
    records.insert(records.end(), static_cast<std::size_t>(count), Comparison{w, l});
  }
  if (!seen_header) throw ParseError(line_no + 1, "missing header row");
  if (ids.size() < 2) {
    throw ParseError(line_no, "need comparisons between at least 2 items");
  }
  return Dataset(std::make_shared<const ItemUniverse>(std::move(ids)), std::move(records));
}

Dataset ParseComparisons(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseComparisons(in);
}

void WriteComparisons(const Dataset& data, std::ostream& out) {
  out << "winner,loser\n";
  for (const Comparison& c : data.records()) {
    out << data.universe().id(c.winner) << ',' << data.universe().id(c.loser) << '\n';
  }
}

}  // namespace pairshrink
