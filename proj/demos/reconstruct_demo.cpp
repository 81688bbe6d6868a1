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

// Round-trips a support claim through projections and back, then counts the
// databases compatible with a pair of projections.

#include <iostream>

#include "patsum/patsum.hpp"

int main() {
  using namespace patsum;

  // supp: empty 6, A 4, B 4, C 4, AB 3, BC 3 (items A,B,C -> 0,1,2).
  RatedCollection::Map entries;
  entries.emplace(Itemset{}, 6);
  entries.emplace(Itemset{0}, 4);
  entries.emplace(Itemset{1}, 4);
  entries.emplace(Itemset{2}, 4);
  entries.emplace(Itemset{0, 1}, 3);
  entries.emplace(Itemset{1, 2}, 3);
  SupportClaim claim{RatedCollection(std::move(entries), 6, true)};

  auto db = brute_force_reconstruct(claim);
  if (!db) {
    std::cout << "no compatible database\n";
    return 1;
  }
  std::cout << "a compatible database:\n" << to_fimi(*db);

  Projection p1 = project(*db, Itemset{0, 1});
  Projection p2 = project(*db, Itemset{1, 2});
  std::cout << "\nprojections compatible: "
            << (projections_compatible({p1, p2}) ? "yes" : "no") << "\n";
  std::cout << "databases compatible with both projections: "
            << count_compatible_two(p1, p2) << "\n";

  auto merged = from_two_to_one(p1, p2);
  std::cout << "\none of them:\n" << (merged ? to_fimi(*merged) : "none\n");
  return 0;
}
