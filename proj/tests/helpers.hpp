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

// Fixtures and independent brute-force oracles shared by the unit tests and
// the acceptance suite. The oracles deliberately avoid the implementation
// paths they are used to check.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "patsum/patsum.hpp"

namespace testing {

using namespace patsum;

// ---------------------------------------------------------------------------
// Fixtures

// Transactions ABC, AB, ABCD, BC with A,B,C,D -> 1,2,3,4 (item 0 unused,
// matching the FIMI encoding of the worked examples).
inline TransactionDatabase d1() {
  return parse_fimi("1 2 3\n1 2\n1 2 3 4\n2 3\n");
}

// Transactions A, AC, ABC, BC with A,B,C -> 0,1,2.
inline TransactionDatabase d2() { return parse_fimi("0\n0 2\n0 1 2\n1 2\n"); }

inline TransactionDatabase random_database(SeededRng& rng, std::size_t n,
                                           std::size_t universe,
                                           double density) {
  std::vector<Itemset> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Item> items;
    for (Item a = 0; a < universe; ++a)
      if (rng.uniform01() < density) items.push_back(a);
    rows.push_back(Itemset::from_sorted(std::move(items)));
  }
  return TransactionDatabase(std::move(rows), universe);
}

// ---------------------------------------------------------------------------
// Itemset/bitmask helpers over a small universe

inline Itemset from_mask(std::uint32_t mask, std::size_t universe) {
  std::vector<Item> items;
  for (Item a = 0; a < universe; ++a)
    if (mask & (1u << a)) items.push_back(a);
  return Itemset::from_sorted(std::move(items));
}

// ---------------------------------------------------------------------------
// Mining oracles

// All itemsets over the universe with fr < sigma whose proper subsets are
// all frequent, by direct enumeration.
inline std::vector<Itemset> oracle_minimal_infrequent(
    const TransactionDatabase& db, const Rat& sigma) {
  const long long n = static_cast<long long>(db.size());
  const std::size_t universe = db.universe();
  const std::uint32_t full = 1u << universe;
  std::vector<bool> frequent(full, false);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    long long supp = support(from_mask(mask, universe), db);
    frequent[mask] = supp * sigma.denominator() >= sigma.numerator() * n;
  }
  std::vector<Itemset> border;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (frequent[mask]) continue;
    bool subsets_ok = true;
    for (Item a = 0; a < universe && subsets_ok; ++a)
      if ((mask & (1u << a)) && !frequent[mask & ~(1u << a)])
        subsets_ok = false;
    if (subsets_ok) border.push_back(from_mask(mask, universe));
  }
  std::sort(border.begin(), border.end(), card_lex_less);
  return border;
}

// ---------------------------------------------------------------------------
// Discretization oracles

// Minimum number of cover points over all contiguous partitions whose blocks
// have range at most 2*eps; exhaustive over the 2^(n-1) breakpoint choices.
template <typename V>
std::size_t oracle_min_cover_points(const std::vector<V>& sorted,
                                    const V& eps) {
  const std::size_t n = sorted.size();
  if (n == 0) return 0;
  std::size_t best = n;
  const std::uint32_t cuts = 1u << (n - 1);
  for (std::uint32_t mask = 0; mask < cuts; ++mask) {
    std::size_t blocks = 1;
    std::size_t start = 0;
    bool feasible = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask & (1u << i)) {
        if (sorted[i] - sorted[start] > eps + eps) feasible = false;
        start = i + 1;
        ++blocks;
      }
    }
    if (sorted[n - 1] - sorted[start] > eps + eps) feasible = false;
    if (feasible) best = std::min(best, blocks);
  }
  return best;
}

// Minimum weighted sum of absolute errors over all partitions of the sorted
// array into exactly k contiguous blocks; the block representative is chosen
// by scanning every candidate value in the block.
inline double oracle_min_segmentation_loss(const std::vector<double>& sorted,
                                           const std::vector<double>& weights,
                                           std::size_t k) {
  const std::size_t n = sorted.size();
  auto block_loss = [&](std::size_t i, std::size_t j) {
    double best = 0.0;
    bool first = true;
    for (std::size_t c = i; c <= j; ++c) {
      double loss = 0.0;
      for (std::size_t t = i; t <= j; ++t)
        loss += weights[t] * std::abs(sorted[t] - sorted[c]);
      if (first || loss < best) {
        best = loss;
        first = false;
      }
    }
    return best;
  };

  double best = 0.0;
  bool found = false;
  std::function<void(std::size_t, std::size_t, double)> recurse =
      [&](std::size_t start, std::size_t blocks_left, double acc) {
        if (blocks_left == 1) {
          double total = acc + block_loss(start, n - 1);
          if (!found || total < best) {
            best = total;
            found = true;
          }
          return;
        }
        for (std::size_t end = start; end + blocks_left - 1 < n; ++end)
          recurse(end + 1, blocks_left - 1, acc + block_loss(start, end));
      };
  recurse(0, k, 0.0);
  return best;
}

// ---------------------------------------------------------------------------
// Poset oracles

inline std::vector<std::vector<bool>> proper_subset_matrix(
    const std::vector<Itemset>& collection) {
  std::vector<std::vector<bool>> below(
      collection.size(), std::vector<bool>(collection.size(), false));
  for (std::size_t i = 0; i < collection.size(); ++i)
    for (std::size_t j = 0; j < collection.size(); ++j)
      if (i != j && collection[i].proper_subset_of(collection[j]))
        below[i][j] = true;
  return below;
}

// Exhaustive maximum matching by trying every subset of edges.
inline std::size_t oracle_max_matching(
    std::size_t n_left, std::size_t n_right,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::size_t best = 0;
  std::vector<bool> left_used(n_left, false), right_used(n_right, false);
  std::function<void(std::size_t, std::size_t)> recurse =
      [&](std::size_t index, std::size_t size) {
        best = std::max(best, size);
        if (index == edges.size()) return;
        recurse(index + 1, size);
        auto [u, v] = edges[index];
        if (!left_used[u] && !right_used[v]) {
          left_used[u] = right_used[v] = true;
          recurse(index + 1, size + 1);
          left_used[u] = right_used[v] = false;
        }
      };
  recurse(0, 0);
  return best;
}

// Largest antichain by bitmask enumeration (|collection| <= ~20).
inline std::size_t oracle_max_antichain(
    const std::vector<Itemset>& collection) {
  auto below = proper_subset_matrix(collection);
  std::size_t best = 0;
  const std::uint32_t full = 1u << collection.size();
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    bool antichain = true;
    for (std::size_t i = 0; i < collection.size() && antichain; ++i)
      for (std::size_t j = 0; j < collection.size() && antichain; ++j)
        if ((mask & (1u << i)) && (mask & (1u << j)) && below[i][j])
          antichain = false;
    if (antichain)
      best = std::max(best, static_cast<std::size_t>(std::popcount(mask)));
  }
  return best;
}

// Longest chain by exhaustive extension.
inline std::size_t oracle_longest_chain(
    const std::vector<Itemset>& collection) {
  auto below = proper_subset_matrix(collection);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> recurse =
      [&](std::size_t last, std::size_t length) {
        best = std::max(best, length);
        for (std::size_t next = 0; next < collection.size(); ++next)
          if (below[last][next]) recurse(next, length + 1);
      };
  for (std::size_t start = 0; start < collection.size(); ++start)
    recurse(start, 1);
  return best;
}

// ---------------------------------------------------------------------------
// Change-profile oracles

// Average over all |x|! item orders of the path products, straight from the
// permutation definition.
inline double oracle_path_average(const Itemset& x,
                                  const ProfileMap<double>& schs) {
  std::vector<Item> order(x.items());
  std::sort(order.begin(), order.end());
  double total = 0.0;
  std::size_t count = 0;
  do {
    double value = 1.0;
    Itemset current;
    for (Item a : order) {
      value *= schs.at(current).changes.at(Itemset{a});
      current = current.with(a);
    }
    total += value;
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return total / static_cast<double>(count);
}

// Every path product, for exact moment computations.
inline std::vector<double> oracle_path_products(const Itemset& x,
                                                const ProfileMap<double>& s) {
  std::vector<Item> order(x.items());
  std::sort(order.begin(), order.end());
  std::vector<double> products;
  do {
    double value = 1.0;
    Itemset current;
    for (Item a : order) {
      value *= s.at(current).changes.at(Itemset{a});
      current = current.with(a);
    }
    products.push_back(value);
  } while (std::next_permutation(order.begin(), order.end()));
  return products;
}

// ---------------------------------------------------------------------------
// Inverse-mining oracles

// Visits every multiset of `n` rows over the given alphabet as a
// non-decreasing index sequence.
inline void for_each_row_multiset(
    std::size_t alphabet_size, std::size_t n,
    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> choice;
  std::function<void(std::size_t)> recurse = [&](std::size_t min_index) {
    if (choice.size() == n) {
      visit(choice);
      return;
    }
    for (std::size_t i = min_index; i < alphabet_size; ++i) {
      choice.push_back(i);
      recurse(i);
      choice.pop_back();
    }
  };
  recurse(0);
}

inline long long multiset_label_count(const std::vector<std::size_t>& rows) {
  long long count = 1;
  for (std::size_t i = 2; i <= rows.size(); ++i) count *= i;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    if (i < rows.size() && rows[i] == rows[i - 1]) {
      ++run;
    } else {
      for (std::size_t f = 2; f <= run; ++f) count /= f;
      run = 1;
    }
  }
  return count;
}

// Number of tid-labeled databases over the union domain compatible with both
// projections, by enumerating row multisets and counting their labelings.
inline long long oracle_count_compatible(const Projection& p1,
                                         const Projection& p2) {
  Itemset domain = p1.onto.unite(p2.onto);
  std::vector<Itemset> alphabet;
  for_each_subset(domain, [&](const Itemset& s) { alphabet.push_back(s); });
  std::sort(alphabet.begin(), alphabet.end(), card_lex_less);

  std::vector<Itemset> want1 = p1.sorted_rows();
  std::vector<Itemset> want2 = p2.sorted_rows();
  long long total = 0;
  for_each_row_multiset(
      alphabet.size(), p1.rows.size(),
      [&](const std::vector<std::size_t>& rows) {
        std::vector<Itemset> proj1, proj2;
        for (std::size_t r : rows) {
          proj1.push_back(p1.onto.intersect(alphabet[r]));
          proj2.push_back(p2.onto.intersect(alphabet[r]));
        }
        std::sort(proj1.begin(), proj1.end(), card_lex_less);
        std::sort(proj2.begin(), proj2.end(), card_lex_less);
        if (proj1 == want1 && proj2 == want2)
          total += multiset_label_count(rows);
      });
  return total;
}

// Whether a database with exactly the claimed supports exists, by exhaustive
// row-multiset enumeration over the claim's item universe.
inline bool oracle_reconstruct_exists(const RatedCollection& claim) {
  std::vector<Item> universe_items;
  for (const auto& [x, supp] : claim.entries())
    for (Item a : x.items()) universe_items.push_back(a);
  Itemset universe{universe_items};
  std::vector<Itemset> alphabet;
  for_each_subset(universe, [&](const Itemset& s) { alphabet.push_back(s); });
  std::sort(alphabet.begin(), alphabet.end(), card_lex_less);

  const long long n = claim.support(Itemset{});
  bool found = false;
  for_each_row_multiset(
      alphabet.size(), static_cast<std::size_t>(n),
      [&](const std::vector<std::size_t>& rows) {
        if (found) return;
        for (const auto& [x, want] : claim.entries()) {
          long long supp = 0;
          for (std::size_t r : rows)
            if (x.subset_of(alphabet[r])) ++supp;
          if (supp != want) return;
        }
        found = true;
      });
  return found;
}

// ---------------------------------------------------------------------------
// Tiling oracle

// Best k-subset of the candidate tiles by exhaustive combination search.
inline long long oracle_best_tiling_area(const Tiling& candidates,
                                         std::size_t k) {
  long long best = 0;
  std::function<void(std::size_t, Tiling&)> recurse =
      [&](std::size_t index, Tiling& chosen) {
        if (chosen.size() == k || index == candidates.size()) {
          best = std::max(best, tiling_area(chosen));
          return;
        }
        recurse(index + 1, chosen);
        chosen.push_back(candidates[index]);
        recurse(index + 1, chosen);
        chosen.pop_back();
      };
  Tiling chosen;
  recurse(0, chosen);
  return best;
}

}  // namespace testing
