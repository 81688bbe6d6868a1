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

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "patsum/common.hpp"
#include "patsum/itemset.hpp"

namespace patsum {

using Tid = std::uint32_t;  // 1-based transaction identifier

/// Transactions with tids 1..n over the item universe {0, ..., universe-1}.
class TransactionDatabase {
 public:
  TransactionDatabase() = default;
  TransactionDatabase(std::vector<Itemset> rows, std::size_t universe)
      : rows_(std::move(rows)), universe_(universe) {
    for (const Itemset& row : rows_)
      if (!row.empty() && row.items().back() >= universe_)
        throw PreconditionError("transaction item outside declared universe");
  }

  static TransactionDatabase from_rows(std::vector<Itemset> rows) {
    std::size_t universe = 0;
    for (const Itemset& row : rows)
      if (!row.empty())
        universe = std::max<std::size_t>(universe, row.items().back() + 1);
    return TransactionDatabase(std::move(rows), universe);
  }

  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  std::size_t universe() const { return universe_; }

  /// tid is 1-based.
  const Itemset& transaction(Tid tid) const { return rows_[tid - 1]; }
  const std::vector<Itemset>& rows() const { return rows_; }

 private:
  std::vector<Itemset> rows_;
  std::size_t universe_ = 0;
};

/// FIMI text: one transaction per line, whitespace-separated item ids.
/// Blank lines are empty transactions. Line k becomes tid k.
inline TransactionDatabase parse_fimi(std::string_view text) {
  std::vector<Itemset> rows;
  std::size_t universe = 0;
  std::size_t line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<Item> items;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      unsigned long long value = 0;
      try {
        value = std::stoull(token, &used);
      } catch (const std::logic_error&) {
        throw ParseError("non-integer item '" + token + "'", line_no);
      }
      if (used != token.size() || token[0] == '-')
        throw ParseError("non-integer item '" + token + "'", line_no);
      items.push_back(static_cast<Item>(value));
      universe = std::max<std::size_t>(universe, value + 1);
    }
    std::vector<Item> sorted(items);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError("duplicate item in transaction", line_no);
    rows.push_back(Itemset::from_sorted(std::move(sorted)));
  }
  return TransactionDatabase(std::move(rows), universe);
}

inline std::string to_fimi(const TransactionDatabase& db) {
  std::string out;
  for (const Itemset& row : db.rows()) {
    out += row.str();
    out += '\n';
  }
  return out;
}

/// Tids (1-based) of the transactions covering x.
inline std::vector<Tid> cover(const Itemset& x, const TransactionDatabase& db) {
  std::vector<Tid> tids;
  for (std::size_t i = 0; i < db.size(); ++i)
    if (x.subset_of(db.rows()[i])) tids.push_back(static_cast<Tid>(i + 1));
  return tids;
}

inline long long support(const Itemset& x, const TransactionDatabase& db) {
  long long count = 0;
  for (const Itemset& row : db.rows())
    if (x.subset_of(row)) ++count;
  return count;
}

}  // namespace patsum
