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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace patsum {

using Item = std::uint32_t;

/// A duplicate-free itemset kept in strictly ascending item order.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<Item> items)
      : Itemset(std::vector<Item>(items)) {}
  explicit Itemset(std::vector<Item> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  // Caller guarantees strictly ascending order.
  static Itemset from_sorted(std::vector<Item> items) {
    Itemset x;
    x.items_ = std::move(items);
    return x;
  }

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  bool contains(Item a) const {
    return std::binary_search(items_.begin(), items_.end(), a);
  }

  bool subset_of(const Itemset& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  bool proper_subset_of(const Itemset& other) const {
    return size() < other.size() && subset_of(other);
  }

  Itemset unite(const Itemset& other) const {
    std::vector<Item> out;
    out.reserve(size() + other.size());
    std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                   other.items_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Itemset intersect(const Itemset& other) const {
    std::vector<Item> out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                          other.items_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Itemset difference(const Itemset& other) const {
    std::vector<Item> out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Itemset with(Item a) const {
    std::vector<Item> out(items_);
    out.insert(std::upper_bound(out.begin(), out.end(), a), a);
    return from_sorted(std::move(out));
  }

  Itemset without(Item a) const {
    std::vector<Item> out;
    out.reserve(items_.size());
    for (Item b : items_)
      if (b != a) out.push_back(b);
    return from_sorted(std::move(out));
  }

  bool operator==(const Itemset& other) const = default;
  std::strong_ordering operator<=>(const Itemset& other) const {
    return items_ <=> other.items_;
  }

  std::string str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out << ' ';
      out << items_[i];
    }
    return out.str();
  }

 private:
  std::vector<Item> items_;
};

// (cardinality, lexicographic) order; the canonical output order.
inline bool card_lex_less(const Itemset& a, const Itemset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct CardLexLess {
  bool operator()(const Itemset& a, const Itemset& b) const {
    return card_lex_less(a, b);
  }
};

/// Visits every subset of `x` (including the empty set and `x` itself).
/// Requires |x| < 64.
template <typename Fn>
void for_each_subset(const Itemset& x, Fn&& fn) {
  const auto& it = x.items();
  const std::uint64_t full = (it.size() >= 64) ? 0 : (1ull << it.size());
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    std::vector<Item> sub;
    for (std::size_t i = 0; i < it.size(); ++i)
      if (mask & (1ull << i)) sub.push_back(it[i]);
    fn(Itemset::from_sorted(std::move(sub)));
  }
}

}  // namespace patsum
