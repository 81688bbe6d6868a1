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
#include <bit>
#include <cstdint>
#include <vector>

#include "patsum/collection.hpp"
#include "patsum/common.hpp"
#include "patsum/mining.hpp"

namespace patsum {

struct DerivabilityBounds {
  Rat lower;  // fr-underline
  Rat upper;  // fr-overline
  bool tight() const { return lower == upper; }
};

/// Truncated inclusion-exclusion bounds on fr(x) from the rated frequencies
/// of all proper subsets of x, clamped to [0, 1]. The empty itemset gets the
/// trivial bounds [0, 1].
inline DerivabilityBounds derivability_bounds(const Itemset& x,
                                              const RatedCollection& c) {
  DerivabilityBounds bounds{Rat(0), Rat(1)};
  if (x.empty()) return bounds;
  const auto& items = x.items();
  const std::uint64_t full = 1ull << items.size();

  // Frequencies of all subsets of x, indexed by bitmask over x's items.
  std::vector<Rat> fr(full);
  for (std::uint64_t mask = 0; mask + 1 < full; ++mask) {
    std::vector<Item> sub;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (1ull << i)) sub.push_back(items[i]);
    Itemset z = Itemset::from_sorted(std::move(sub));
    if (!c.contains(z))
      throw PreconditionError("derivability bounds need a rating for {" +
                              z.str() + "}");
    fr[mask] = c.frequency(z);
  }

  for (std::uint64_t y = 0; y + 1 < full; ++y) {
    // Sum over z with y ⊆ z ⊂ x of (-1)^{|x\z|+1} fr(z).
    Rat sum(0);
    const std::uint64_t rest = (full - 1) & ~y;
    for (std::uint64_t add = rest;; add = (add - 1) & rest) {
      std::uint64_t z = y | add;
      if (z + 1 < full) {
        int co_size = std::popcount(full - 1 - z);
        sum += (co_size % 2 == 0) ? -fr[z] : fr[z];
      }
      if (add == 0) break;
    }
    int co_y = std::popcount(full - 1 - y);
    if (co_y % 2 == 1)
      bounds.upper = std::min(bounds.upper, sum);
    else
      bounds.lower = std::max(bounds.lower, sum);
  }
  bounds.lower = std::max(bounds.lower, Rat(0));
  bounds.upper = std::min(bounds.upper, Rat(1));
  return bounds;
}

/// Members of a downward-closed rated collection whose frequency is not
/// pinned by the bounds of their proper subsets. The member size is capped
/// at floor(log2 dbSize); see NOTES in the tests for the edge cases this
/// cap decides.
inline RatedCollection non_derivable_itemsets(const RatedCollection& c) {
  std::size_t cap = 0;
  for (long long n = c.db_size(); n >= 2; n /= 2) ++cap;
  std::vector<Itemset> members;
  for (const auto& [x, supp] : c.entries()) {
    if (x.size() > cap) continue;
    if (x.empty() || !derivability_bounds(x, c).tight()) members.push_back(x);
  }
  return c.restrict_to(members);
}

inline RatedCollection non_derivable_itemsets(const TransactionDatabase& db,
                                              const Rat& sigma) {
  return non_derivable_itemsets(mine_frequent(db, sigma));
}

}  // namespace patsum
