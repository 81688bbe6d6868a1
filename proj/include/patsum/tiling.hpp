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
#include <set>
#include <utility>
#include <vector>

#include "patsum/common.hpp"
#include "patsum/database.hpp"
#include "patsum/mining.hpp"

namespace patsum {

/// A tid-set x itemset block of ones in the database matrix.
struct Tile {
  std::vector<Tid> tids;  // sorted ascending, 1-based
  Itemset items;

  long long area() const {
    return static_cast<long long>(tids.size()) *
           static_cast<long long>(items.size());
  }
};

using Tiling = std::vector<Tile>;

inline long long tile_area(const Tile& t) { return t.area(); }

/// Number of distinct (tid, item) cells covered by the tiling.
inline long long tiling_area(const Tiling& tiling) {
  std::set<std::pair<Tid, Item>> cells;
  for (const Tile& t : tiling)
    for (Tid tid : t.tids)
      for (Item a : t.items.items()) cells.emplace(tid, a);
  return static_cast<long long>(cells.size());
}

/// The unique maximal tile on x: (cover(x), cl(x)).
inline Tile maximal_tile_of(const Itemset& x, const TransactionDatabase& db) {
  std::vector<Tid> tids = cover(x, db);
  if (tids.empty())
    throw PreconditionError("no maximal tile: {" + x.str() +
                            "} has support 0");
  return Tile{std::move(tids), closure_of(x, db)};
}

/// Maximal tiles of all closed itemsets of the database (sigma = 1/|D|);
/// the candidate pool for greedy tiling.
inline Tiling closed_tile_candidates(const TransactionDatabase& db) {
  Tiling candidates;
  for (const Itemset& x : mine_closed(db, Rat(1, db.size())).itemsets())
    candidates.push_back(maximal_tile_of(x, db));
  return candidates;
}

struct GreedyTiling {
  Tiling tiles;
  std::vector<long long> coverage;  // cumulative covered cells per prefix
  long long total_cells = 0;        // ones in the database
};

/// Greedily adds the candidate maximizing the covered area. Ties go to the
/// (cardinality, lexicographic) smallest itemset. Stops early when all
/// candidates are used.
inline GreedyTiling greedy_tiling(const TransactionDatabase& db,
                                  std::size_t k) {
  if (db.empty())
    throw PreconditionError("tiling undefined for an empty database");
  GreedyTiling out;
  for (const Itemset& row : db.rows())
    out.total_cells += static_cast<long long>(row.size());

  Tiling candidates = closed_tile_candidates(db);
  std::vector<bool> used(candidates.size(), false);
  std::set<std::pair<Tid, Item>> covered;

  for (std::size_t step = 0; step < k && step < candidates.size(); ++step) {
    // Candidates are in (cardinality, lexicographic) itemset order, so
    // keeping the first strict maximum applies the deterministic tie-break.
    std::size_t best = candidates.size();
    long long best_gain = -1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (used[i]) continue;
      long long gain = 0;
      for (Tid tid : candidates[i].tids)
        for (Item a : candidates[i].items.items())
          if (!covered.count({tid, a})) ++gain;
      if (gain > best_gain) {
        best = i;
        best_gain = gain;
      }
    }
    used[best] = true;
    for (Tid tid : candidates[best].tids)
      for (Item a : candidates[best].items.items()) covered.emplace(tid, a);
    out.tiles.push_back(candidates[best]);
    out.coverage.push_back(static_cast<long long>(covered.size()));
  }
  return out;
}

}  // namespace patsum
