// Copyright 2026 The Authors.
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

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "patsum/common.hpp"
#include "patsum/itemset.hpp"
#include "patsum/rational.hpp"

namespace patsum {

/// Itemsets rated by exact support counts against a database of dbSize
/// transactions. Iteration order is (cardinality, lexicographic).
class RatedCollection {
 public:
  using Map = std::map<Itemset, long long, CardLexLess>;

  RatedCollection() = default;
  RatedCollection(Map entries, long long db_size, bool downward_closed)
      : entries_(std::move(entries)),
        db_size_(db_size),
        downward_closed_(downward_closed) {
    for (const auto& [x, supp] : entries_)
      if (supp < 0 || supp > db_size_)
        throw PreconditionError("support outside [0, dbSize] for {" + x.str() +
                                "}");
  }

  const Map& entries() const { return entries_; }
  long long db_size() const { return db_size_; }
  bool downward_closed() const { return downward_closed_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const Itemset& x) const { return entries_.count(x) > 0; }

  long long support(const Itemset& x) const {
    auto it = entries_.find(x);
    if (it == entries_.end())
      throw PreconditionError("itemset {" + x.str() + "} is not rated");
    return it->second;
  }

  Rat frequency(const Itemset& x) const {
    if (db_size_ == 0)
      throw PreconditionError("frequency undefined for an empty database");
    return Rat(support(x), db_size_);
  }

  std::vector<Itemset> itemsets() const {
    std::vector<Itemset> out;
    out.reserve(entries_.size());
    for (const auto& [x, supp] : entries_) out.push_back(x);
    return out;
  }

  /// Keeps only the given members; the downward-closed flag is dropped.
  RatedCollection restrict_to(const std::vector<Itemset>& members) const {
    Map kept;
    for (const Itemset& x : members) kept.emplace(x, support(x));
    return RatedCollection(std::move(kept), db_size_, false);
  }

  /// Checks that every immediate subset of a member is present with support
  /// at least the member's. Throws on the first violation.
  void require_downward_closed() const {
    for (const auto& [x, supp] : entries_) {
      for (Item a : x.items()) {
        auto it = entries_.find(x.without(a));
        if (it == entries_.end())
          throw PreconditionError("collection is not downward closed: {" +
                                  x.without(a).str() + "} missing");
        if (it->second < supp)
          throw PreconditionError(
              "supports are not anti-monotone between {" + it->first.str() +
              "} and {" + x.str() + "}");
      }
    }
  }

 private:
  Map entries_;
  long long db_size_ = 0;
  bool downward_closed_ = false;
};

/// One line per itemset: "support<TAB>item item ...", sorted by
/// (cardinality, lexicographic); the empty itemset has no items after the tab.
inline std::string to_tsv(const RatedCollection& c) {
  std::string out;
  for (const auto& [x, supp] : c.entries()) {
    out += std::to_string(supp);
    out += '\t';
    out += x.str();
    out += '\n';
  }
  return out;
}

/// Parses the TSV format above. Lines starting with '#' are ignored.
/// dbSize is taken from the empty itemset when present, else the max support.
inline RatedCollection parse_collection_tsv(std::string_view text) {
  RatedCollection::Map entries;
  long long max_support = 0;
  std::size_t line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("expected 'support<TAB>items'", line_no);
    long long supp = 0;
    try {
      supp = std::stoll(line.substr(0, tab));
    } catch (const std::logic_error&) {
      throw ParseError("bad support '" + line.substr(0, tab) + "'", line_no);
    }
    if (supp < 0) throw ParseError("negative support", line_no);
    std::istringstream fields(line.substr(tab + 1));
    std::vector<Item> items;
    std::string token;
    while (fields >> token) {
      try {
        items.push_back(static_cast<Item>(std::stoul(token)));
      } catch (const std::logic_error&) {
        throw ParseError("non-integer item '" + token + "'", line_no);
      }
    }
    std::vector<Item> sorted(items);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("duplicate item in itemset", line_no);
    Itemset x = Itemset::from_sorted(std::move(sorted));
    if (!entries.emplace(x, supp).second)
      throw ParseError("duplicate itemset {" + x.str() + "}", line_no);
    max_support = std::max(max_support, supp);
  }
  // dbSize is supp(empty) for well-formed collections; the max keeps even
  // inconsistent claims (supports above supp(empty)) representable.
  long long db_size = max_support;
  if (auto it = entries.find(Itemset{}); it != entries.end())
    db_size = std::max(db_size, it->second);
  return RatedCollection(std::move(entries), db_size, false);
}

}  // namespace patsum
