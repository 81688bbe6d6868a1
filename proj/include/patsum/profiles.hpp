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
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "patsum/collection.hpp"
#include "patsum/common.hpp"
#include "patsum/itemset.hpp"
#include "patsum/rational.hpp"
#include "patsum/rng.hpp"

namespace patsum {

enum class ProfileKind { kSpecializing, kGeneralizing };
enum class ProfileVariant { kConcise, kSimple };

/// Multiplicative changes of one itemset's frequency against its
/// neighborhood. Specializing changes live in [0,1], generalizing changes
/// in [1, 1/sigma].
template <typename V>
struct ChangeProfile {
  Itemset owner;
  ProfileKind kind = ProfileKind::kSpecializing;
  ProfileVariant variant = ProfileVariant::kConcise;
  std::map<Itemset, V, CardLexLess> changes;
};

template <typename V>
using ProfileMap = std::map<Itemset, ChangeProfile<V>, CardLexLess>;

struct ChangeProfiles {
  ProfileMap<Rat> specializing;
  ProfileMap<Rat> generalizing;
};

/// Concise specializing and generalizing change profiles of every member of
/// a downward-closed collection with strictly positive frequencies.
inline ChangeProfiles change_profiles(const RatedCollection& c) {
  c.require_downward_closed();
  for (const auto& [x, supp] : c.entries())
    if (supp == 0)
      throw PreconditionError("change profiles need strictly positive "
                              "frequencies; {" +
                              x.str() + "} has support 0");

  ChangeProfiles out;
  for (const auto& [x, supp] : c.entries()) {
    out.specializing[x] = {x, ProfileKind::kSpecializing,
                           ProfileVariant::kConcise, {}};
    out.generalizing[x] = {x, ProfileKind::kGeneralizing,
                           ProfileVariant::kConcise, {}};
  }
  for (const auto& [x, supp] : c.entries()) {
    Rat fr_x = c.frequency(x);
    for_each_subset(x, [&](const Itemset& y) {
      Rat fr_rest = c.frequency(x.difference(y));
      out.specializing[x.difference(y)].changes[y] = fr_x / fr_rest;
      out.generalizing[x].changes[y] = fr_rest / fr_x;
    });
  }
  return out;
}

/// Restriction of a concise profile to singleton keys.
template <typename V>
ChangeProfile<V> simplify(const ChangeProfile<V>& profile) {
  ChangeProfile<V> out{profile.owner, profile.kind, ProfileVariant::kSimple,
                       {}};
  for (const auto& [key, value] : profile.changes)
    if (key.size() == 1) out.changes.emplace(key, value);
  return out;
}

template <typename V>
ProfileMap<V> simplify_all(const ProfileMap<V>& profiles) {
  ProfileMap<V> out;
  for (const auto& [owner, profile] : profiles)
    out.emplace(owner, simplify(profile));
  return out;
}

struct SimpleProfiles {
  ProfileMap<Rat> specializing;
  ProfileMap<Rat> generalizing;
};

inline SimpleProfiles simple_profiles(const RatedCollection& c) {
  ChangeProfiles concise = change_profiles(c);
  return {simplify_all(concise.specializing),
          simplify_all(concise.generalizing)};
}

enum class ProfileMetric { kSumAbs, kMaxAbs };

/// Distance over the common key domain; empty common domain is "undefined"
/// (no value). Zero iff the profiles agree on every common key; the
/// triangle inequality does not hold in general.
template <typename V>
std::optional<V> profile_distance(const ChangeProfile<V>& p,
                                  const ChangeProfile<V>& q,
                                  ProfileMetric metric) {
  if (p.kind != q.kind || p.variant != q.variant)
    throw PreconditionError("profiles of different kind are not comparable");
  std::optional<V> distance;
  for (const auto& [key, value] : p.changes) {
    auto it = q.changes.find(key);
    if (it == q.changes.end()) continue;
    V diff = value < it->second ? it->second - value : value - it->second;
    if (!distance)
      distance = diff;
    else if (metric == ProfileMetric::kSumAbs)
      *distance = *distance + diff;
    else
      *distance = std::max(*distance, diff);
  }
  return distance;
}

/// Binary merge tree with merge heights; leaves carry owner itemsets.
template <typename V>
struct Dendrogram {
  struct Node {
    std::optional<Itemset> owner;  // leaves only
    std::size_t left = 0, right = 0;
    V height{};
  };
  std::vector<Node> nodes;  // leaves first; the last node is the root
  std::size_t root = 0;
};

/// Average-linkage agglomerative clustering. Undefined pairwise distances
/// count as zero. Ties pick the lexicographically smallest pair of cluster
/// representatives (each cluster is represented by its smallest owner).
template <typename V>
Dendrogram<V> agglomerative_cluster(const std::vector<ChangeProfile<V>>& ps,
                                    ProfileMetric metric) {
  if (ps.empty()) throw PreconditionError("nothing to cluster");
  Dendrogram<V> tree;
  struct Cluster {
    std::size_t node;
    Itemset representative;
    std::vector<std::size_t> members;  // profile indices
  };
  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    tree.nodes.push_back({ps[i].owner, 0, 0, V{}});
    clusters.push_back({i, ps[i].owner, {i}});
  }

  std::vector<std::vector<V>> base(ps.size(), std::vector<V>(ps.size(), V{}));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      auto d = profile_distance(ps[i], ps[j], metric);
      base[i][j] = base[j][i] = d.value_or(V{});
    }

  while (clusters.size() > 1) {
    std::size_t best_a = 0, best_b = 1;
    std::optional<V> best;
    for (std::size_t a = 0; a < clusters.size(); ++a) {
      for (std::size_t b = a + 1; b < clusters.size(); ++b) {
        V sum{};
        for (std::size_t i : clusters[a].members)
          for (std::size_t j : clusters[b].members) sum = sum + base[i][j];
        auto pairs = static_cast<long long>(clusters[a].members.size() *
                                            clusters[b].members.size());
        V avg = sum / V(pairs);
        bool better = false;
        if (!best || avg < *best) {
          better = true;
        } else if (avg == *best) {
          auto key = [&](std::size_t x, std::size_t y) {
            return std::pair<const Itemset&, const Itemset&>(
                clusters[x].representative, clusters[y].representative);
          };
          auto [a1, a2] = key(a, b);
          auto [b1, b2] = key(best_a, best_b);
          better = card_lex_less(a1, b1) ||
                   (a1 == b1 && card_lex_less(a2, b2));
        }
        if (better) {
          best = avg;
          best_a = a;
          best_b = b;
        }
      }
    }
    Cluster merged;
    merged.node = tree.nodes.size();
    tree.nodes.push_back({std::nullopt, clusters[best_a].node,
                          clusters[best_b].node, *best});
    merged.representative =
        card_lex_less(clusters[best_a].representative,
                      clusters[best_b].representative)
            ? clusters[best_a].representative
            : clusters[best_b].representative;
    merged.members = clusters[best_a].members;
    merged.members.insert(merged.members.end(),
                          clusters[best_b].members.begin(),
                          clusters[best_b].members.end());
    clusters.erase(clusters.begin() + best_b);
    clusters.erase(clusters.begin() + best_a);
    clusters.push_back(std::move(merged));
  }
  tree.root = clusters.front().node;
  return tree;
}

namespace detail {

template <typename V>
const V& change_for(const ProfileMap<V>& schs, const Itemset& owner,
                    Item added) {
  auto profile = schs.find(owner);
  if (profile == schs.end())
    throw PreconditionError("no profile for owner {" + owner.str() + "}");
  auto change = profile->second.changes.find(Itemset{added});
  if (change == profile->second.changes.end())
    throw PreconditionError("missing change " + std::to_string(added) +
                            " in the profile of {" + owner.str() + "}");
  return change->second;
}

}  // namespace detail

/// Average over all |X|! item orders of the path-product frequency estimate,
/// computed by dynamic programming over the subsets of x.
template <typename V>
V dp_from_schs(const Itemset& x, const ProfileMap<V>& schs) {
  const auto& items = x.items();
  if (items.size() >= 63)
    throw PreconditionError("itemset too large for subset DP");
  const std::uint64_t full = 1ull << items.size();
  std::vector<V> estimate(full, V{});
  estimate[0] = V(1);
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    V sum{};
    int card = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!(mask & (1ull << i))) continue;
      ++card;
      std::uint64_t without = mask & ~(1ull << i);
      std::vector<Item> sub;
      for (std::size_t j = 0; j < items.size(); ++j)
        if (without & (1ull << j)) sub.push_back(items[j]);
      sum = sum + estimate[without] *
                      detail::change_for(
                          schs, Itemset::from_sorted(std::move(sub)),
                          items[i]);
    }
    estimate[mask] = sum / V(card);
  }
  return estimate[full - 1];
}

/// Mean of k uniformly random path products; an unbiased estimate of the
/// dp_from_schs value. Deterministic for a fixed seed.
template <typename V>
V sample_from_schs(const Itemset& x, const ProfileMap<V>& schs,
                   std::size_t paths, std::uint64_t seed) {
  if (paths == 0) throw PreconditionError("need at least one path");
  SeededRng rng(seed);
  V total{};
  std::vector<Item> order(x.items());
  for (std::size_t p = 0; p < paths; ++p) {
    rng.shuffle(order);
    V value(1);
    Itemset current;
    for (Item a : order) {
      value = value * detail::change_for(schs, current, a);
      current = current.with(a);
    }
    total = total + value;
  }
  return total / V(static_cast<long long>(paths));
}

enum class NoiseModel { kPerturb, kUniform, kGaussian };

/// Specializing profiles with each change perturbed and truncated to [0,1].
inline ProfileMap<double> noisify_profiles(const ProfileMap<Rat>& profiles,
                                           NoiseModel model, double eps,
                                           std::uint64_t seed) {
  if (eps < 0.0) throw PreconditionError("eps must be non-negative");
  SeededRng rng(seed);
  ProfileMap<double> out;
  for (const auto& [owner, profile] : profiles) {
    ChangeProfile<double> noisy{owner, profile.kind, profile.variant, {}};
    for (const auto& [key, value] : profile.changes) {
      double v = to_double(value);
      switch (model) {
        case NoiseModel::kPerturb:
          v += rng.coin() ? eps : -eps;
          break;
        case NoiseModel::kUniform:
          v += rng.uniform(-eps, eps);
          break;
        case NoiseModel::kGaussian:
          v += rng.gaussian(0.0, eps);
          break;
      }
      noisy.changes.emplace(key, std::clamp(v, 0.0, 1.0));
    }
    out.emplace(owner, std::move(noisy));
  }
  return out;
}

inline ProfileMap<double> to_double_profiles(const ProfileMap<Rat>& profiles) {
  ProfileMap<double> out;
  for (const auto& [owner, profile] : profiles) {
    ChangeProfile<double> p{owner, profile.kind, profile.variant, {}};
    for (const auto& [key, value] : profile.changes)
      p.changes.emplace(key, to_double(value));
    out.emplace(owner, std::move(p));
  }
  return out;
}

/// Experimental interval propagation: given per-change bounds, the frequency
/// of x is at least the best lower path product and at most the best upper
/// path product.
inline std::pair<double, double> dp_interval_from_schs(
    const Itemset& x, const ProfileMap<double>& lower,
    const ProfileMap<double>& upper) {
  const auto& items = x.items();
  const std::uint64_t full = 1ull << items.size();
  std::vector<double> lo(full, 0.0), hi(full, 0.0);
  lo[0] = hi[0] = 1.0;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    double best_lo = 0.0, best_hi = 2.0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (!(mask & (1ull << i))) continue;
      std::uint64_t without = mask & ~(1ull << i);
      std::vector<Item> sub;
      for (std::size_t j = 0; j < items.size(); ++j)
        if (without & (1ull << j)) sub.push_back(items[j]);
      Itemset owner = Itemset::from_sorted(std::move(sub));
      best_lo = std::max(best_lo,
                         lo[without] * detail::change_for(lower, owner,
                                                          items[i]));
      best_hi = std::min(best_hi,
                         hi[without] * detail::change_for(upper, owner,
                                                          items[i]));
    }
    lo[mask] = best_lo;
    hi[mask] = best_hi;
  }
  return {lo[full - 1], hi[full - 1]};
}

}  // namespace patsum
