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

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "patsum/collection.hpp"
#include "patsum/common.hpp"
#include "patsum/database.hpp"
#include "patsum/itemset.hpp"
#include "patsum/mining.hpp"
#include "patsum/projection.hpp"

namespace patsum {

using BigInt = boost::multiprecision::cpp_int;

/// A downward-closed collection of itemsets with claimed integer supports;
/// supp(empty) fixes the transaction count.
struct SupportClaim {
  RatedCollection collection;

  void validate() const {
    if (!collection.contains(Itemset{}))
      throw PreconditionError("claim must rate the empty itemset");
    collection.require_downward_closed();
    if (collection.support(Itemset{}) != collection.db_size())
      throw PreconditionError("supp(empty) must equal the claimed dbSize");
  }
};

/// Peels counts from maximal to minimal itemsets to build, for every maximal
/// member, a projection that any compatible database must be equivalent to.
/// Each projection is padded with empty rows up to supp(empty).
inline std::vector<Projection> to_projections(const SupportClaim& claim) {
  claim.validate();
  const RatedCollection& c = claim.collection;

  std::vector<Projection> out;
  for (const Itemset& m : maximal_of(c)) {
    // Residual supports of the sub-lattice below m.
    std::map<Itemset, long long, CardLexLess> residual;
    for (const auto& [y, supp] : c.entries())
      if (y.subset_of(m)) residual.emplace(y, supp);

    Projection p;
    p.onto = m;
    std::map<Itemset, long long, CardLexLess> remaining(residual);
    while (!remaining.empty()) {
      // Maximal members of the remaining sub-collection.
      std::vector<Itemset> peel;
      for (const auto& [y, supp] : remaining) {
        bool is_max = true;
        for (const auto& [z, sz] : remaining)
          if (y.proper_subset_of(z)) {
            is_max = false;
            break;
          }
        if (is_max) peel.push_back(y);
      }
      // Members whose residual reached zero stay in place so that later
      // batches still decrement them; a negative residual flags an
      // inconsistent claim.
      for (const Itemset& y : peel) {
        long long count = remaining.at(y);
        for (long long i = 0; i < count; ++i) p.rows.push_back(y);
        remaining.erase(y);
        for (auto& [z, supp] : remaining) {
          if (!z.proper_subset_of(y)) continue;
          supp -= count;
          if (supp < 0)
            throw IncompatibleError(
                "claim is internally inconsistent below {" + m.str() + "}");
        }
      }
    }
    std::sort(p.rows.begin(), p.rows.end(), card_lex_less);
    out.push_back(std::move(p));
  }
  return out;
}

/// Pairwise test: the restrictions of every two projections to their common
/// items must agree as multisets. Necessary for a compatible database to
/// exist; also sufficient for two projections.
inline bool projections_compatible(const std::vector<Projection>& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i].rows.size() != ps[j].rows.size()) return false;
      Itemset common = ps[i].onto.intersect(ps[j].onto);
      if (!restrict(ps[i], common).equivalent(restrict(ps[j], common)))
        return false;
    }
  }
  return true;
}

/// Builds a database whose projections onto the two domains are equivalent
/// to the inputs by zipping rows grouped on the common items; rows in each
/// group are paired in ascending lexicographic order. Returns nothing when
/// the groups do not match.
inline std::optional<TransactionDatabase> from_two_to_one(const Projection& p1,
                                                          const Projection& p2) {
  if (p1.rows.size() != p2.rows.size()) return std::nullopt;
  Itemset common = p1.onto.intersect(p2.onto);

  std::map<Itemset, std::vector<Itemset>, CardLexLess> groups1, groups2;
  for (const Itemset& row : p1.rows)
    groups1[common.intersect(row)].push_back(row);
  for (const Itemset& row : p2.rows)
    groups2[common.intersect(row)].push_back(row);
  if (groups1.size() != groups2.size()) return std::nullopt;

  std::vector<Itemset> rows;
  auto it1 = groups1.begin();
  auto it2 = groups2.begin();
  for (; it1 != groups1.end(); ++it1, ++it2) {
    if (it1->first != it2->first || it1->second.size() != it2->second.size())
      return std::nullopt;
    std::sort(it1->second.begin(), it1->second.end(), card_lex_less);
    std::sort(it2->second.begin(), it2->second.end(), card_lex_less);
    for (std::size_t i = 0; i < it1->second.size(); ++i)
      rows.push_back(it1->second[i].unite(it2->second[i]));
  }
  TransactionDatabase db = TransactionDatabase::from_rows(std::move(rows));
  if (!project(db, p1.onto).equivalent(p1) ||
      !project(db, p2.onto).equivalent(p2))
    return std::nullopt;
  return db;
}

/// Number of tid-labeled databases compatible with both projections:
/// c * prod_X a_X * b_X over the common-intersection classes X, where c
/// distributes tids over classes and a_X, b_X distribute each side's rows
/// within a class.
inline BigInt count_compatible_two(const Projection& p1,
                                   const Projection& p2) {
  if (!projections_compatible({p1, p2}))
    throw IncompatibleError("projections have no common database");

  auto factorial = [](long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
  };

  Itemset common = p1.onto.intersect(p2.onto);
  std::map<Itemset, std::pair<std::vector<Itemset>, std::vector<Itemset>>,
           CardLexLess>
      groups;
  for (const Itemset& row : p1.rows)
    groups[common.intersect(row)].first.push_back(row);
  for (const Itemset& row : p2.rows)
    groups[common.intersect(row)].second.push_back(row);

  BigInt total = factorial(static_cast<long long>(p1.rows.size()));
  for (auto& [trace, sides] : groups) {
    auto class_count = static_cast<long long>(sides.first.size());
    total /= factorial(class_count);  // the c denominator

    auto arrangements = [&](std::vector<Itemset>& rows) {
      std::sort(rows.begin(), rows.end(), card_lex_less);
      BigInt ways = factorial(static_cast<long long>(rows.size()));
      long long run = 1;
      for (std::size_t i = 1; i <= rows.size(); ++i) {
        if (i < rows.size() && rows[i] == rows[i - 1]) {
          ++run;
        } else {
          ways /= factorial(run);
          run = 1;
        }
      }
      return ways;
    };
    total *= arrangements(sides.first);   // a_X
    total *= arrangements(sides.second);  // b_X
  }
  return total;
}

/// Exhaustive backtracking search for a database compatible with the claim.
/// Rows are tried as a non-decreasing sequence over the claim's item
/// universe, so the first hit is the lexicographically smallest multiset.
/// Returns nothing when no database of the claimed size exists.
inline std::optional<TransactionDatabase> brute_force_reconstruct(
    const SupportClaim& claim, std::size_t max_n = 8,
    std::size_t max_items = 6) {
  if (max_items > 6 || max_n > 8)
    throw PreconditionError("reconstruction guards: at most 6 items and 8 "
                            "transactions");
  const RatedCollection& c = claim.collection;
  if (!c.contains(Itemset{}))
    throw PreconditionError("claim must rate the empty itemset");
  const long long n = c.support(Itemset{});
  if (static_cast<std::size_t>(n) > max_n)
    throw PreconditionError("claimed database larger than maxN");

  // Fast rejection of anti-monotonicity violations (a support above n, or a
  // rated subset below a rated superset).
  for (const auto& [x, supp] : c.entries()) {
    if (supp > n) return std::nullopt;
    for (const auto& [y, sy] : c.entries())
      if (x.proper_subset_of(y) && sy > supp) return std::nullopt;
  }

  std::vector<Item> universe_items;
  for (const auto& [x, supp] : c.entries())
    for (Item a : x.items()) universe_items.push_back(a);
  Itemset universe{universe_items};
  if (universe.size() > max_items)
    throw PreconditionError("claim universe larger than maxItems");

  std::vector<Itemset> alphabet;  // all candidate rows, ascending
  for_each_subset(universe, [&](const Itemset& s) { alphabet.push_back(s); });
  std::sort(alphabet.begin(), alphabet.end(), card_lex_less);

  std::vector<const Itemset*> claimed;
  std::vector<long long> target;
  for (const auto& [x, supp] : c.entries()) {
    claimed.push_back(&x);
    target.push_back(supp);
  }

  std::vector<long long> partial(claimed.size(), 0);
  std::vector<Itemset> rows;
  std::function<bool(std::size_t, long long)> search =
      [&](std::size_t min_row, long long remaining) {
        for (std::size_t i = 0; i < claimed.size(); ++i) {
          if (partial[i] > target[i]) return false;
          if (partial[i] + remaining < target[i]) return false;
        }
        if (remaining == 0) return true;
        for (std::size_t r = min_row; r < alphabet.size(); ++r) {
          for (std::size_t i = 0; i < claimed.size(); ++i)
            if (claimed[i]->subset_of(alphabet[r])) ++partial[i];
          rows.push_back(alphabet[r]);
          if (search(r, remaining - 1)) return true;
          rows.pop_back();
          for (std::size_t i = 0; i < claimed.size(); ++i)
            if (claimed[i]->subset_of(alphabet[r])) --partial[i];
        }
        return false;
      };

  if (!search(0, n)) return std::nullopt;
  return TransactionDatabase(std::move(rows), universe.empty()
                                                  ? 0
                                                  : universe.items().back() + 1);
}

}  // namespace patsum
