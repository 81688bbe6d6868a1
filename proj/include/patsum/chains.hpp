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
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <vector>

#include "patsum/common.hpp"
#include "patsum/itemset.hpp"
#include "patsum/rational.hpp"

namespace patsum {

/// Left/right vertex counts with adjacency from left to right.
struct BipartiteGraph {
  std::size_t n_left = 0;
  std::size_t n_right = 0;
  std::vector<std::vector<std::size_t>> adj;  // adj[left] = rights
};

struct Matching {
  // match_right[r] = matched left vertex or npos; match_left likewise.
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> match_left;
  std::vector<std::size_t> match_right;
  std::size_t size = 0;
};

/// Hopcroft-Karp maximum-cardinality matching. Deterministic for a fixed
/// adjacency order.
inline Matching max_bipartite_matching(const BipartiteGraph& g) {
  Matching m;
  m.match_left.assign(g.n_left, Matching::npos);
  m.match_right.assign(g.n_right, Matching::npos);
  std::vector<std::size_t> dist(g.n_left);

  auto bfs = [&]() {
    std::queue<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < g.n_left; ++u) {
      if (m.match_left[u] == Matching::npos) {
        dist[u] = 0;
        queue.push(u);
      } else {
        dist[u] = Matching::npos;
      }
    }
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : g.adj[u]) {
        std::size_t w = m.match_right[v];
        if (w == Matching::npos) {
          found = true;
        } else if (dist[w] == Matching::npos) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    for (std::size_t v : g.adj[u]) {
      std::size_t w = m.match_right[v];
      if (w == Matching::npos ||
          (dist[w] == dist[u] + 1 && dfs(w))) {
        m.match_left[u] = v;
        m.match_right[v] = u;
        return true;
      }
    }
    dist[u] = Matching::npos;
    return false;
  };

  while (bfs())
    for (std::size_t u = 0; u < g.n_left; ++u)
      if (m.match_left[u] == Matching::npos && dfs(u)) ++m.size;
  return m;
}

/// Greedy maximal matching over edges in the given order; at least half the
/// maximum size.
inline Matching greedy_maximal_matching(
    std::size_t n_left, std::size_t n_right,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Matching m;
  m.match_left.assign(n_left, Matching::npos);
  m.match_right.assign(n_right, Matching::npos);
  for (const auto& [u, v] : edges) {
    if (m.match_left[u] == Matching::npos &&
        m.match_right[v] == Matching::npos) {
      m.match_left[u] = v;
      m.match_right[v] = u;
      ++m.size;
    }
  }
  return m;
}

/// Chains listed bottom-up; every consecutive pair is strictly comparable.
struct ChainPartition {
  std::vector<std::vector<Itemset>> chains;
};

struct AntichainPartition {
  std::vector<std::vector<Itemset>> antichains;
};

namespace detail {

// subset_matrix[i][j] iff collection[i] is a proper subset of collection[j].
inline std::vector<std::vector<bool>> subset_matrix(
    const std::vector<Itemset>& collection) {
  std::vector<std::vector<bool>> below(
      collection.size(), std::vector<bool>(collection.size(), false));
  for (std::size_t i = 0; i < collection.size(); ++i)
    for (std::size_t j = 0; j < collection.size(); ++j)
      if (i != j && collection[i].proper_subset_of(collection[j]))
        below[i][j] = true;
  return below;
}

}  // namespace detail

/// Minimum chain partition via maximum bipartite matching; the chain count
/// equals |collection| - |maximum matching|.
inline ChainPartition partition_into_chains(
    const std::vector<Itemset>& collection) {
  std::vector<Itemset> sorted(collection);
  std::sort(sorted.begin(), sorted.end(), card_lex_less);
  auto below = detail::subset_matrix(sorted);

  BipartiteGraph g;
  g.n_left = g.n_right = sorted.size();
  g.adj.assign(sorted.size(), {});
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j)
      if (below[i][j]) g.adj[i].push_back(j);
  Matching m = max_bipartite_matching(g);

  ChainPartition out;
  for (std::size_t start = 0; start < sorted.size(); ++start) {
    if (m.match_right[start] != Matching::npos) continue;  // not a chain head
    std::vector<Itemset> chain;
    std::size_t current = start;
    while (true) {
      chain.push_back(sorted[current]);
      if (m.match_left[current] == Matching::npos) break;
      current = m.match_left[current];
    }
    out.chains.push_back(std::move(chain));
  }
  return out;
}

/// Insertion-based minimal chain partition: each pattern goes to the first
/// chain that can take it (front, back or between two consecutive members);
/// otherwise it opens a new chain. No two result chains merge into a chain.
inline ChainPartition minimal_partition_into_chains(
    const std::vector<Itemset>& collection) {
  ChainPartition out;
  for (const Itemset& p : collection) {
    bool placed = false;
    for (auto& chain : out.chains) {
      if (p.proper_subset_of(chain.front())) {
        chain.insert(chain.begin(), p);
        placed = true;
      } else if (chain.back().proper_subset_of(p)) {
        chain.push_back(p);
        placed = true;
      } else {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          if (chain[i].proper_subset_of(p) &&
              p.proper_subset_of(chain[i + 1])) {
            chain.insert(chain.begin() + i + 1, p);
            placed = true;
            break;
          }
        }
      }
      if (placed) break;
    }
    if (!placed) out.chains.push_back({p});
  }
  return out;
}

/// Minimum antichain partition. Uses cardinality layers when they are
/// already optimal (layer count equals the longest chain), otherwise strips
/// maximal members repeatedly.
inline AntichainPartition partition_into_antichains(
    const std::vector<Itemset>& collection) {
  std::vector<Itemset> sorted(collection);
  std::sort(sorted.begin(), sorted.end(), card_lex_less);
  auto below = detail::subset_matrix(sorted);

  // Longest chain by DP over the (cardinality-sorted) containment order.
  std::vector<std::size_t> height(sorted.size(), 1);
  std::size_t longest = sorted.empty() ? 0 : 1;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (below[i][j]) height[j] = std::max(height[j], height[i] + 1);
    longest = std::max(longest, height[j]);
  }

  AntichainPartition out;
  std::map<std::size_t, std::vector<Itemset>> layers;
  for (const Itemset& x : sorted) layers[x.size()].push_back(x);
  if (layers.size() == longest) {
    for (auto& [card, layer] : layers) out.antichains.push_back(layer);
    return out;
  }

  std::vector<bool> removed(sorted.size(), false);
  std::size_t remaining = sorted.size();
  while (remaining > 0) {
    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (removed[i]) continue;
      bool is_max = true;
      for (std::size_t j = 0; j < sorted.size(); ++j)
        if (!removed[j] && below[i][j]) {
          is_max = false;
          break;
        }
      if (is_max) maximal.push_back(i);
    }
    std::vector<Itemset> antichain;
    for (std::size_t i : maximal) {
      removed[i] = true;
      --remaining;
      antichain.push_back(sorted[i]);
    }
    out.antichains.push_back(std::move(antichain));
  }
  std::reverse(out.antichains.begin(), out.antichains.end());
  return out;
}

/// One chain condensed to a single itemset: each item carries the minimum
/// rank of a chain member containing it, plus the per-rank value vector.
struct EncodedChain {
  std::map<Item, std::size_t> item_ranks;
  std::vector<Rat> values;  // values[rank]

  /// Rendered as the rank-superscript token form, items ascending.
  std::string str() const {
    std::string out;
    for (const auto& [item, rank] : item_ranks) {
      if (!out.empty()) out += ' ';
      out += std::to_string(item) + "^" + std::to_string(rank);
    }
    return out;
  }
};

inline EncodedChain encode_chain(const std::vector<Itemset>& chain,
                                 const std::vector<Rat>& values) {
  if (chain.empty()) throw PreconditionError("cannot encode an empty chain");
  if (values.size() != chain.size())
    throw PreconditionError("one value per chain member required");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!chain[i].proper_subset_of(chain[i + 1]))
      throw PreconditionError("chain members must be strictly ascending");

  EncodedChain encoded;
  encoded.values = values;
  for (std::size_t rank = 0; rank < chain.size(); ++rank)
    for (Item a : chain[rank].items())
      encoded.item_ranks.try_emplace(a, rank);
  return encoded;
}

inline std::vector<Itemset> decode_chain(const EncodedChain& encoded) {
  std::vector<Itemset> chain;
  for (std::size_t rank = 0; rank < encoded.values.size(); ++rank) {
    std::vector<Item> items;
    for (const auto& [item, r] : encoded.item_ranks)
      if (r <= rank) items.push_back(item);
    chain.push_back(Itemset::from_sorted(std::move(items)));
  }
  return chain;
}

struct DilworthReport {
  std::size_t chain_count = 0;
  std::size_t max_antichain = 0;   // exhaustive for small collections,
                                   // otherwise the widest cardinality layer
  bool exhaustive = false;
  bool equal = false;
};

/// Cross-checks the minimum chain count against the largest antichain
/// (exhaustively for up to 15 members).
inline DilworthReport dilworth_check(const std::vector<Itemset>& collection) {
  DilworthReport report;
  report.chain_count = partition_into_chains(collection).chains.size();

  std::vector<Itemset> sorted(collection);
  std::sort(sorted.begin(), sorted.end(), card_lex_less);
  if (sorted.size() <= 15) {
    report.exhaustive = true;
    auto below = detail::subset_matrix(sorted);
    const std::uint32_t full = 1u << sorted.size();
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      bool antichain = true;
      for (std::size_t i = 0; i < sorted.size() && antichain; ++i)
        for (std::size_t j = 0; j < sorted.size() && antichain; ++j)
          if ((mask & (1u << i)) && (mask & (1u << j)) &&
              (below[i][j] || below[j][i]))
            antichain = false;
      if (antichain)
        report.max_antichain = std::max(
            report.max_antichain,
            static_cast<std::size_t>(std::popcount(mask)));
    }
  } else {
    std::map<std::size_t, std::size_t> layer_sizes;
    for (const Itemset& x : sorted) ++layer_sizes[x.size()];
    for (const auto& [card, count] : layer_sizes)
      report.max_antichain = std::max(report.max_antichain, count);
  }
  report.equal = report.chain_count == report.max_antichain;
  return report;
}

}  // namespace patsum
