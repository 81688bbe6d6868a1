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
#include "patsum/database.hpp"
#include "patsum/itemset.hpp"
#include "patsum/rational.hpp"

namespace patsum {

struct LevelwiseResult {
  RatedCollection frequent;
  // Candidates that were generated (all proper subsets frequent) but failed
  // the frequency test. Includes infrequent singletons of the universe.
  std::vector<Itemset> minimal_infrequent;
};

namespace detail {

inline void check_sigma(const Rat& sigma) {
  if (sigma <= Rat(0) || sigma > Rat(1))
    throw PreconditionError("sigma must lie in (0, 1]");
}

// supp/n >= sigma without leaving integers.
inline bool meets_threshold(long long supp, long long n, const Rat& sigma) {
  return supp * sigma.denominator() >= sigma.numerator() * n;
}

// Classic prefix join: two lexicographically sorted k-itemsets sharing the
// first k-1 items produce one (k+1)-candidate.
inline std::vector<Itemset> join_candidates(const std::vector<Itemset>& level) {
  std::vector<Itemset> out;
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      const auto& a = level[i].items();
      const auto& b = level[j].items();
      if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) break;
      out.push_back(level[i].with(b.back()));
    }
  }
  return out;
}

}  // namespace detail

/// Levelwise (Apriori) mining of the sigma-frequent itemsets together with
/// the minimal infrequent border collected from rejected candidates.
inline LevelwiseResult mine_levelwise(const TransactionDatabase& db,
                                      const Rat& sigma) {
  detail::check_sigma(sigma);
  const long long n = static_cast<long long>(db.size());
  if (n == 0) {
    RatedCollection::Map entries;
    entries.emplace(Itemset{}, 0);
    return {RatedCollection(std::move(entries), 0, true), {}};
  }

  RatedCollection::Map entries;
  entries.emplace(Itemset{}, n);
  std::vector<Itemset> border;

  std::vector<Itemset> level;  // frequent itemsets of the current cardinality
  for (Item a = 0; a < db.universe(); ++a) {
    Itemset x{a};
    long long supp = support(x, db);
    if (detail::meets_threshold(supp, n, sigma)) {
      entries.emplace(x, supp);
      level.push_back(std::move(x));
    } else {
      border.push_back(std::move(x));
    }
  }

  while (!level.empty()) {
    std::vector<Itemset> next;
    for (Itemset& cand : detail::join_candidates(level)) {
      bool all_subsets_frequent = true;
      for (Item a : cand.items()) {
        if (!entries.count(cand.without(a))) {
          all_subsets_frequent = false;
          break;
        }
      }
      if (!all_subsets_frequent) continue;
      long long supp = support(cand, db);
      if (detail::meets_threshold(supp, n, sigma)) {
        entries.emplace(cand, supp);
        next.push_back(std::move(cand));
      } else {
        border.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }

  std::sort(border.begin(), border.end(), card_lex_less);
  return {RatedCollection(std::move(entries), n, true), std::move(border)};
}

inline RatedCollection mine_frequent(const TransactionDatabase& db,
                                     const Rat& sigma) {
  return mine_levelwise(db, sigma).frequent;
}

/// Itemsets with fr < sigma whose proper subsets are all sigma-frequent.
inline std::vector<Itemset> minimal_infrequent(const TransactionDatabase& db,
                                               const Rat& sigma) {
  return mine_levelwise(db, sigma).minimal_infrequent;
}

/// Exhaustive miner over all 2^universe itemsets; the correctness oracle
/// for mine_frequent. Guarded to universes of at most 20 items.
inline RatedCollection mine_brute_force(const TransactionDatabase& db,
                                        const Rat& sigma) {
  detail::check_sigma(sigma);
  if (db.universe() > 20)
    throw PreconditionError("brute-force mining is limited to 20 items");
  const long long n = static_cast<long long>(db.size());
  if (n == 0) {
    RatedCollection::Map entries;
    entries.emplace(Itemset{}, 0);
    return RatedCollection(std::move(entries), 0, true);
  }

  std::vector<std::uint32_t> row_masks;
  row_masks.reserve(db.size());
  for (const Itemset& row : db.rows()) {
    std::uint32_t mask = 0;
    for (Item a : row.items()) mask |= 1u << a;
    row_masks.push_back(mask);
  }

  RatedCollection::Map entries;
  const std::uint64_t all = 1ull << db.universe();
  for (std::uint64_t mask = 0; mask < all; ++mask) {
    long long supp = 0;
    for (std::uint32_t row : row_masks)
      if ((row & mask) == mask) ++supp;
    if (!detail::meets_threshold(supp, n, sigma)) continue;
    std::vector<Item> items;
    for (Item a = 0; a < db.universe(); ++a)
      if (mask & (1ull << a)) items.push_back(a);
    entries.emplace(Itemset::from_sorted(std::move(items)), supp);
  }
  return RatedCollection(std::move(entries), n, true);
}

/// Intersection of all transactions containing x.
inline Itemset closure_of(const Itemset& x, const TransactionDatabase& db) {
  std::optional<Itemset> closure;
  for (const Itemset& row : db.rows()) {
    if (!x.subset_of(row)) continue;
    closure = closure ? closure->intersect(row) : row;
  }
  if (!closure)
    throw PreconditionError("closure undefined: {" + x.str() +
                            "} has support 0");
  return *closure;
}

/// Levelwise closed-itemset mining: closures of closed sets extended by one
/// frequent item at a time, starting from the closure of the empty itemset.
inline RatedCollection mine_closed(const TransactionDatabase& db,
                                   const Rat& sigma) {
  detail::check_sigma(sigma);
  const long long n = static_cast<long long>(db.size());
  if (n == 0)
    throw PreconditionError("closed itemsets undefined for an empty database");

  std::vector<Item> frequent_items;
  for (Item a = 0; a < db.universe(); ++a)
    if (detail::meets_threshold(support(Itemset{a}, db), n, sigma))
      frequent_items.push_back(a);

  RatedCollection::Map entries;
  std::vector<Itemset> level;
  Itemset bottom = closure_of(Itemset{}, db);
  entries.emplace(bottom, support(bottom, db));
  level.push_back(std::move(bottom));

  while (!level.empty()) {
    std::vector<Itemset> next;
    for (const Itemset& x : level) {
      for (Item a : frequent_items) {
        if (x.contains(a)) continue;
        long long supp = support(x.with(a), db);
        if (supp == 0 || !detail::meets_threshold(supp, n, sigma)) continue;
        Itemset cl = closure_of(x.with(a), db);
        if (entries.emplace(cl, supp).second) next.push_back(std::move(cl));
      }
    }
    level = std::move(next);
  }
  return RatedCollection(std::move(entries), n, false);
}

/// Members whose every proper superset in the rated map has a strictly
/// smaller value. Works on any collection; throws if a comparable pair
/// violates anti-monotonicity.
template <typename V>
std::vector<Itemset> closed_members(
    const std::map<Itemset, V, CardLexLess>& rated) {
  std::vector<Itemset> out;
  for (const auto& [x, value] : rated) {
    bool closed = true;
    for (const auto& [y, other] : rated) {
      if (!x.proper_subset_of(y)) continue;
      if (other > value)
        throw PreconditionError("values are not anti-monotone between {" +
                                x.str() + "} and {" + y.str() + "}");
      if (other == value) {
        closed = false;
        break;
      }
    }
    if (closed) out.push_back(x);
  }
  return out;
}

/// Members whose every proper subset in the rated map has a strictly larger
/// value.
template <typename V>
std::vector<Itemset> free_members(
    const std::map<Itemset, V, CardLexLess>& rated) {
  std::vector<Itemset> out;
  for (const auto& [x, value] : rated) {
    bool free = true;
    for (const auto& [y, other] : rated) {
      if (!y.proper_subset_of(x)) continue;
      if (other < value)
        throw PreconditionError("values are not anti-monotone between {" +
                                y.str() + "} and {" + x.str() + "}");
      if (other == value) {
        free = false;
        break;
      }
    }
    if (free) out.push_back(x);
  }
  return out;
}

inline RatedCollection detect_closed(const RatedCollection& c) {
  return c.restrict_to(closed_members(c.entries()));
}

inline std::vector<Itemset> free_itemsets(const RatedCollection& c) {
  return free_members(c.entries());
}

inline std::vector<Itemset> maximal_of(const RatedCollection& c) {
  std::vector<Itemset> out;
  for (const auto& [x, sx] : c.entries()) {
    bool maximal = true;
    for (const auto& [y, sy] : c.entries())
      if (x.proper_subset_of(y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

struct AssociationRule {
  Itemset body;
  Itemset head;  // disjoint from body
  long long support = 0;
  Rat accuracy;  // supp(body ∪ head) / supp(body)
};

struct RuleSet {
  std::vector<AssociationRule> rules;
  std::size_t skipped = 0;  // rules whose body had support 0
};

/// Every rule X -> Y\X with X a proper subset of a member Y, both rated.
inline RuleSet association_rules(const RatedCollection& c) {
  c.require_downward_closed();
  RuleSet out;
  for (const auto& [y, supp_y] : c.entries()) {
    for_each_subset(y, [&](const Itemset& x) {
      if (x == y) return;
      long long supp_x = c.support(x);
      if (supp_x == 0) {
        ++out.skipped;
        return;
      }
      out.rules.push_back(
          {x, y.difference(x), supp_y, Rat(supp_y, supp_x)});
    });
  }
  std::sort(out.rules.begin(), out.rules.end(),
            [](const AssociationRule& a, const AssociationRule& b) {
              Itemset ua = a.body.unite(a.head);
              Itemset ub = b.body.unite(b.head);
              if (ua != ub) return card_lex_less(ua, ub);
              return card_lex_less(a.body, b.body);
            });
  return out;
}

}  // namespace patsum
